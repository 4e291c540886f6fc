#include "mixforge/splitter.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

#include "mixforge/geometry.hpp"

namespace mixforge {

namespace {

const Grammar& o2_grammar() {
  static const Grammar g = grammar_o2();
  return g;
}

const Grammar& o3_grammar() {
  static const Grammar g = grammar_o3();
  return g;
}

std::array<int, 3> char_step(char c) {
  const Letter l = Letter::from_char(c);
  std::array<int, 3> d{0, 0, 0};
  d[l.axis - 1] = l.sign;
  return d;
}

struct Prefix {
  std::vector<std::array<int, 3>> p;

  explicit Prefix(const std::string& s) {
    p.assign(s.size() + 1, {0, 0, 0});
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto step = char_step(s[i]);
      for (int k = 0; k < 3; ++k) p[i + 1][k] = p[i][k] + step[k];
    }
  }

  std::array<int, 3> disp(int b, int e) const {
    return {p[e][0] - p[b][0], p[e][1] - p[b][1], p[e][2] - p[b][2]};
  }
};

bool zero3(const std::array<int, 3>& d) {
  return d[0] == 0 && d[1] == 0 && d[2] == 0;
}

// Non-decreasing cut tuples over [0, limit], lexicographically.
struct CutOdometer {
  int k = 0;
  int limit = 0;
  std::vector<int> cuts;

  void reset(int k_, int limit_) {
    k = k_;
    limit = limit_;
    cuts.assign(std::max(k, 0), 0);
  }
  bool advance() {
    int i = k - 1;
    while (i >= 0 && cuts[i] == limit) --i;
    if (i < 0) return false;
    ++cuts[i];
    for (int j = i + 1; j < k; ++j) cuts[j] = cuts[i];
    return true;
  }
};

struct TokenBlock {
  int comp = 0;
  int begin = 0;
  int end = 0;
};

struct SearchHit {
  std::size_t arrangement_index = 0;
  const Arrangement* arrangement = nullptr;
  std::vector<TokenBlock> blocks;  // aligned with arrangement tokens
};

// Lexicographically least (arrangement index, cut tuple) candidate whose
// x-part has zero displacement and both parts are nonempty.
std::optional<SearchHit> merge_search(const RuleFamily& merge,
                                      const std::vector<std::string>& comps,
                                      const std::vector<Prefix>& prefixes,
                                      std::uint64_t* scanned) {
  const int arity = static_cast<int>(comps.size());
  int m = 0;
  for (const auto& c : comps) m += static_cast<int>(c.size());
  for (std::size_t ai = 0; ai < merge.arrangements.size(); ++ai) {
    const Arrangement& arr = merge.arrangements[ai];
    std::vector<int> group_size(arity);
    bool feasible = true;
    for (int c = 0; c < arity; ++c) {
      group_size[c] = arr.group_end(c) - arr.group_begin(c);
      if (group_size[c] == 0 && !comps[c].empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<CutOdometer> odo(arity);
    for (int c = 0; c < arity; ++c)
      odo[c].reset(group_size[c] - 1, static_cast<int>(comps[c].size()));
    for (;;) {
      if (scanned) ++*scanned;
      std::array<int, 3> dx{0, 0, 0};
      int len_x = 0;
      for (int c = 0; c < arity; ++c) {
        const int L = static_cast<int>(comps[c].size());
        for (int slot = 0; slot < group_size[c]; ++slot) {
          const Token& t = arr.tokens[arr.group_begin(c) + slot];
          if (t.child != 0) continue;
          const int b = slot == 0 ? 0 : odo[c].cuts[slot - 1];
          const int e = slot == group_size[c] - 1 ? L : odo[c].cuts[slot];
          const auto d = prefixes[c].disp(b, e);
          for (int k = 0; k < 3; ++k) dx[k] += d[k];
          len_x += e - b;
        }
      }
      if (zero3(dx) && len_x > 0 && len_x < m) {
        SearchHit hit;
        hit.arrangement_index = ai;
        hit.arrangement = &arr;
        hit.blocks.resize(arr.tokens.size());
        for (int c = 0; c < arity; ++c) {
          const int L = static_cast<int>(comps[c].size());
          for (int slot = 0; slot < group_size[c]; ++slot) {
            const int b = slot == 0 ? 0 : odo[c].cuts[slot - 1];
            const int e = slot == group_size[c] - 1 ? L : odo[c].cuts[slot];
            hit.blocks[arr.group_begin(c) + slot] = {c, b, e};
          }
        }
        return hit;
      }
      int c = arity - 1;
      while (c >= 0 && !odo[c].advance()) {
        odo[c].reset(group_size[c] - 1, static_cast<int>(comps[c].size()));
        --c;
      }
      if (c < 0) break;
    }
  }
  return std::nullopt;
}

Displacement string_displacement(const std::string& s, int n) {
  Displacement d;
  d.n = n;
  for (char ch : s) {
    const auto step = char_step(ch);
    for (int k = 0; k < 3; ++k) d.c[k] += step[k];
  }
  return d;
}

void validate_witness(const SplitWitness& w, const std::string& w1,
                      const std::string& w2, int n) {
  const WordTuple expected{w1, w2};
  const WordTuple got = apply_arrangement(
      w.arrangement, {WordTuple{w.x1, w.x2}, WordTuple{w.y1, w.y2}});
  const std::size_t m = w1.size() + w2.size();
  const std::size_t lx = w.x1.size() + w.x2.size();
  const std::size_t ly = w.y1.size() + w.y2.size();
  bool ok = got == expected;
  ok = ok && string_displacement(w.x1 + w.x2, n).is_zero();
  ok = ok && string_displacement(w.y1 + w.y2, n).is_zero();
  ok = ok && std::max(lx, ly) < m;
  std::string all;
  for (const auto& arc : w.decomposition.arcs) all += arc;
  ok = ok && all == w1 + w2;
  for (const auto& pair : w.pairing) {
    Displacement sum;
    sum = w.decomposition.arc_vectors[pair[0]] +
          w.decomposition.arc_vectors[pair[1]];
    ok = ok && sum.is_zero();
  }
  if (!ok) throw std::logic_error("split witness fails its structural checks");
}

SplitWitness build_witness(SplitWitness::Origin origin, const SearchHit& hit,
                           const std::vector<std::string>& comps, int n) {
  SplitWitness w;
  w.origin = origin;
  w.arrangement = *hit.arrangement;
  w.arrangement_index = hit.arrangement_index;
  const Arrangement& arr = *hit.arrangement;

  std::vector<int> offsets(comps.size() + 1, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    offsets[c + 1] = offsets[c] + static_cast<int>(comps[c].size());

  std::array<std::string*, 4> slots{&w.x1, &w.x2, &w.y1, &w.y2};
  int arc_pos = 0;
  int x_seen = 0, y_seen = 0;
  std::vector<int> boundaries;
  for (std::size_t i = 0; i < arr.tokens.size(); ++i) {
    const Token& t = arr.tokens[i];
    const TokenBlock& blk = hit.blocks[i];
    const std::string text =
        comps[blk.comp].substr(blk.begin, blk.end - blk.begin);
    *slots[t.child * 2 + t.comp] = text;
    w.decomposition.arcs[arc_pos] = text;
    w.decomposition.arc_vectors[arc_pos] = string_displacement(text, n);
    if (t.child == 0)
      w.pairing[0][x_seen++] = arc_pos;
    else
      w.pairing[1][y_seen++] = arc_pos;
    if (i + 1 < arr.tokens.size())
      boundaries.push_back(offsets[blk.comp] + blk.end);
    ++arc_pos;
  }
  // The boundary between the last token of one component group and the
  // first of the next is the q landmark, not an r/s cut.
  for (int c = 0; c + 1 < static_cast<int>(comps.size()); ++c) {
    const int g = arr.group_end(c) - arr.group_begin(c);
    if (g > 0 && arr.group_end(c) < static_cast<int>(arr.tokens.size())) {
      boundaries.erase(boundaries.begin() + (arr.group_end(c) - 1));
      break;
    }
  }
  w.decomposition.p_index = 0;
  w.decomposition.q_index = static_cast<int>(comps[0].size());
  w.decomposition.cuts = boundaries;
  w.decomposition.r_index = boundaries.empty() ? 0 : boundaries[0];
  w.decomposition.s_index = boundaries.size() > 1 ? boundaries[1]
                                                  : w.decomposition.r_index;
  return w;
}

std::size_t arrangement_index_of(const RuleFamily& family,
                                 const Arrangement& arr) {
  const auto it = std::lower_bound(family.arrangements.begin(),
                                   family.arrangements.end(), arr);
  return static_cast<std::size_t>(it - family.arrangements.begin());
}

SearchHit endpoint_hit(const RuleFamily& merge, const std::string& w1,
                       const std::string& w2, bool take_last1,
                       bool take_last2) {
  const int l1 = static_cast<int>(w1.size());
  const int l2 = static_cast<int>(w2.size());
  Arrangement arr;
  SearchHit hit;
  auto push = [&](const Token& t, int comp, int b, int e) {
    arr.tokens.push_back(t);
    hit.blocks.push_back({comp, b, e});
  };
  if (take_last1) {
    push(Token::var(1, 0), 0, 0, l1 - 1);
    push(Token::var(0, 0), 0, l1 - 1, l1);
  } else {
    push(Token::var(0, 0), 0, 0, 1);
    push(Token::var(1, 0), 0, 1, l1);
  }
  arr.splits = {2};
  if (take_last2) {
    push(Token::var(1, 1), 1, 0, l2 - 1);
    push(Token::var(0, 1), 1, l2 - 1, l2);
  } else {
    push(Token::var(0, 1), 1, 0, 1);
    push(Token::var(1, 1), 1, 1, l2);
  }
  hit.arrangement_index = arrangement_index_of(merge, arr);
  hit.arrangement = &merge.arrangements[hit.arrangement_index];
  return hit;
}

std::optional<SplitWitness> find_split_impl(const std::string& w1,
                                            const std::string& w2) {
  const Grammar& g = o2_grammar();
  const int l1 = static_cast<int>(w1.size());
  const int l2 = static_cast<int>(w2.size());
  const int m = l1 + l2;
  if (m < 4) return std::nullopt;
  const std::vector<std::string> comps{w1, w2};

  // Endpoint fast path: an end letter of w1 inverse to an end letter of w2.
  if (l1 > 0 && l2 > 0) {
    auto inverse_chars = [](char a, char b) {
      const Letter la = Letter::from_char(a);
      return inverse_letter(la) == Letter::from_char(b);
    };
    struct Combo {
      bool last1, last2;
    };
    const Combo combos[4] = {{false, false}, {false, true},
                             {true, false},  {true, true}};
    for (const Combo& cb : combos) {
      if (cb.last1 && l1 < 2) continue;
      if (cb.last2 && l2 < 2) continue;
      const char c1 = cb.last1 ? w1.back() : w1.front();
      const char c2 = cb.last2 ? w2.back() : w2.front();
      if (!inverse_chars(c1, c2)) continue;
      SearchHit hit = endpoint_hit(g.merge, w1, w2, cb.last1, cb.last2);
      SplitWitness w =
          build_witness(SplitWitness::Origin::Endpoint, hit, comps, 2);
      validate_witness(w, w1, w2, 2);
      return w;
    }
  }

  // Case-5 fast path: a coincidence across the q cut splits directly.
  {
    const Word u1 = parse_word(w1, 2), u2 = parse_word(w2, 2);
    if (auto c5 = find_case5_pair(u1, u2)) {
      Arrangement arr;
      SearchHit hit;
      arr.tokens = {Token::var(0, 0), Token::var(1, 0), Token::var(1, 1),
                    Token::var(0, 1)};
      arr.splits = {2};
      hit.blocks = {{0, 0, c5->t1},
                    {0, c5->t1, l1},
                    {1, 0, c5->t2 - l1},
                    {1, c5->t2 - l1, l2}};
      hit.arrangement_index = arrangement_index_of(g.merge, arr);
      hit.arrangement = &g.merge.arrangements[hit.arrangement_index];
      SplitWitness w =
          build_witness(SplitWitness::Origin::Case5, hit, comps, 2);
      validate_witness(w, w1, w2, 2);
      return w;
    }
  }

  const std::vector<Prefix> prefixes{Prefix(w1), Prefix(w2)};
  if (auto hit = merge_search(g.merge, comps, prefixes, nullptr)) {
    SplitWitness w = build_witness(SplitWitness::Origin::Search, *hit, comps, 2);
    validate_witness(w, w1, w2, 2);
    return w;
  }
  return std::nullopt;
}

void require_o2(const Word& w1, const Word& w2) {
  for (const Word* w : {&w1, &w2})
    for (const Letter& l : w->letters)
      if (l.axis > 2)
        throw Error(ErrorCode::NotInOn, "letters outside the O2 alphabet");
  if (!in_on(concat(w1, w2)))
    throw Error(ErrorCode::NotInOn, "w1w2 is not in O2");
}

void require_o3(const Word& w1, const Word& w2, const Word& w3) {
  if (!in_on(concat(concat(w1, w2), w3)))
    throw Error(ErrorCode::NotInOn, "w1w2w3 is not in O3");
}

}  // namespace

std::optional<SplitWitness> find_split(const Word& w1, const Word& w2) {
  require_o2(w1, w2);
  return find_split_impl(format_word(w1), format_word(w2));
}

namespace {

// Rewrites a merge arrangement into the pair-insert arrangement obtained by
// replacing the x variables with the literal letters they carry and renaming
// the y variables to x's.
Arrangement pair_from_merge(const Arrangement& merge_arr,
                            const std::vector<std::string>& x_contents) {
  Arrangement out;
  std::vector<int> counts;
  for (int c = 0; c < merge_arr.head_arity(); ++c) {
    int count = 0;
    for (int i = merge_arr.group_begin(c); i < merge_arr.group_end(c); ++i) {
      const Token& t = merge_arr.tokens[i];
      if (t.kind == Token::Kind::Var && t.child == 0) {
        for (char ch : x_contents[t.comp]) {
          out.tokens.push_back(Token::literal(Letter::from_char(ch)));
          ++count;
        }
      } else if (t.kind == Token::Kind::Var) {
        out.tokens.push_back(Token::var(0, t.comp));
        ++count;
      }
    }
    counts.push_back(count);
  }
  int acc = 0;
  for (int c = 0; c + 1 < merge_arr.head_arity(); ++c) {
    acc += counts[c];
    out.splits.push_back(acc);
  }
  return out;
}

DerivationTree base_pair_tree(const WordTuple& yield, const Grammar& g) {
  char first = 0;
  for (const auto& s : yield)
    if (!s.empty()) {
      first = s[0];
      break;
    }
  const int axis = Letter::from_char(first).axis;
  const RuleFamily& fam = g.pair_inserts[axis - 1];
  DerivationTree axiom;
  axiom.rule = RuleKind::Axiom;
  axiom.yield.assign(g.arity, "");
  for (const Arrangement& arr : fam.arrangements) {
    if (check_step(yield, arr, {axiom.yield})) {
      DerivationTree node;
      node.rule = RuleKind::PairInsert;
      node.axis = axis;
      node.arrangement = arr;
      node.children.push_back(axiom);
      node.yield = yield;
      return node;
    }
  }
  throw std::logic_error("no pair-insert arrangement matches a 2-letter yield");
}

DerivationTree derive_rec2(const std::string& w1, const std::string& w2) {
  const Grammar& g = o2_grammar();
  const std::size_t total = w1.size() + w2.size();
  DerivationTree node;
  if (total == 0) {
    node.rule = RuleKind::Axiom;
    node.yield = {"", ""};
    return node;
  }
  if (total == 2) return base_pair_tree({w1, w2}, g);
  auto witness = find_split_impl(w1, w2);
  if (!witness)
    throw Error(ErrorCode::Incompleteness,
                "no split witness for (\"" + w1 + "\", \"" + w2 +
                    "\"), a decomposition counterexample");
  if (witness->x1.size() + witness->x2.size() == 2) {
    node.rule = RuleKind::PairInsert;
    node.axis = Letter::from_char((witness->x1 + witness->x2)[0]).axis;
    node.arrangement =
        pair_from_merge(witness->arrangement, {witness->x1, witness->x2});
    node.children.push_back(derive_rec2(witness->y1, witness->y2));
  } else {
    node.rule = RuleKind::Merge;
    node.arrangement = witness->arrangement;
    node.children.push_back(derive_rec2(witness->x1, witness->x2));
    node.children.push_back(derive_rec2(witness->y1, witness->y2));
  }
  node.yield = {w1, w2};
  return node;
}

}  // namespace

DerivationTree derive(const Word& w1, const Word& w2) {
  require_o2(w1, w2);
  DerivationTree tree = derive_rec2(format_word(w1), format_word(w2));
  const VerifyResult check = verify_tree(tree, o2_grammar());
  if (!check)
    throw std::logic_error("derive produced an unverifiable tree: " +
                           check.reason);
  return tree;
}

namespace {

struct EndPos {
  int comp;
  bool last;
  int index;  // within the component
};

std::optional<SplitWitness3> endpoint_split3(
    const std::vector<std::string>& comps, const Grammar& g) {
  std::vector<EndPos> ends;
  for (int c = 0; c < 3; ++c) {
    const int len = static_cast<int>(comps[c].size());
    if (len == 0) continue;
    ends.push_back({c, false, 0});
    if (len > 1) ends.push_back({c, true, len - 1});
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      const EndPos& p = ends[i];
      const EndPos& q = ends[j];
      if (p.comp == q.comp && !(p.last == false && q.last == true)) continue;
      const Letter lp = Letter::from_char(comps[p.comp][p.index]);
      const Letter lq = Letter::from_char(comps[q.comp][q.index]);
      if (!(inverse_letter(lp) == lq)) continue;
      // x1 = the earlier letter, x2 = the later one, x3 = eps.
      Arrangement arr;
      SplitWitness3 w;
      w.x = {std::string(1, lp.to_char()), std::string(1, lq.to_char()), ""};
      std::vector<int> counts;
      for (int c = 0; c < 3; ++c) {
        int count = 0;
        int b = 0, e = static_cast<int>(comps[c].size());
        const bool p_front = p.comp == c && !p.last;
        const bool p_back = p.comp == c && p.last;
        const bool q_front = q.comp == c && !q.last;
        const bool q_back = q.comp == c && q.last;
        if (p_front) {
          arr.tokens.push_back(Token::var(0, 0));
          ++count;
          ++b;
        }
        if (q_front) {
          arr.tokens.push_back(Token::var(0, 1));
          ++count;
          ++b;
        }
        arr.tokens.push_back(Token::var(1, c));
        ++count;
        if (p_back) --e;
        if (q_back) --e;
        w.y[c] = comps[c].substr(b, e - b);
        if (p_back) {
          arr.tokens.push_back(Token::var(0, 0));
          ++count;
        }
        if (q_back) {
          arr.tokens.push_back(Token::var(0, 1));
          ++count;
        }
        if (c == 2) {
          arr.tokens.push_back(Token::var(0, 2));
          ++count;
        }
        counts.push_back(count);
      }
      arr.splits = {counts[0], counts[0] + counts[1]};
      w.arrangement = arr;
      w.arrangement_index = arrangement_index_of(g.merge, arr);
      if (!string_displacement(w.y[0] + w.y[1] + w.y[2], 3).is_zero())
        continue;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<SplitWitness3> find_split3_impl(
    const std::vector<std::string>& comps, std::uint64_t* scanned) {
  const Grammar& g = o3_grammar();
  int m = 0;
  for (const auto& c : comps) m += static_cast<int>(c.size());
  if (m < 4) return std::nullopt;
  if (auto w = endpoint_split3(comps, g)) return w;
  std::vector<Prefix> prefixes;
  for (const auto& c : comps) prefixes.emplace_back(c);
  auto hit = merge_search(g.merge, comps, prefixes, scanned);
  if (!hit) return std::nullopt;
  SplitWitness3 w;
  w.arrangement = *hit->arrangement;
  w.arrangement_index = hit->arrangement_index;
  std::vector<int> offsets(4, 0);
  for (int c = 0; c < 3; ++c)
    offsets[c + 1] = offsets[c] + static_cast<int>(comps[c].size());
  for (std::size_t i = 0; i < hit->arrangement->tokens.size(); ++i) {
    const Token& t = hit->arrangement->tokens[i];
    const TokenBlock& blk = hit->blocks[i];
    const std::string text =
        comps[blk.comp].substr(blk.begin, blk.end - blk.begin);
    (t.child == 0 ? w.x : w.y)[t.comp] = text;
    if (i + 1 < hit->arrangement->tokens.size())
      w.cuts.push_back(offsets[blk.comp] + blk.end);
  }
  return w;
}

DerivationTree derive_rec3(const std::vector<std::string>& comps,
                           Counterexample3* counterexample) {
  const Grammar& g = o3_grammar();
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  DerivationTree node;
  if (total == 0) {
    node.rule = RuleKind::Axiom;
    node.yield.assign(3, "");
    return node;
  }
  if (total == 2) return base_pair_tree({comps[0], comps[1], comps[2]}, g);
  std::uint64_t scanned = 0;
  auto witness = find_split3_impl(comps, &scanned);
  if (!witness) {
    counterexample->words = {comps[0], comps[1], comps[2]};
    counterexample->search_space_scanned = scanned;
    throw Error(ErrorCode::Incompleteness, "split search exhausted");
  }
  std::size_t len_x = 0;
  for (const auto& s : witness->x) len_x += s.size();
  if (len_x == 2) {
    node.rule = RuleKind::PairInsert;
    std::string xcat = witness->x[0] + witness->x[1] + witness->x[2];
    node.axis = Letter::from_char(xcat[0]).axis;
    node.arrangement = pair_from_merge(
        witness->arrangement,
        {witness->x[0], witness->x[1], witness->x[2]});
    node.children.push_back(derive_rec3(
        {witness->y[0], witness->y[1], witness->y[2]}, counterexample));
  } else {
    node.rule = RuleKind::Merge;
    node.arrangement = witness->arrangement;
    node.children.push_back(derive_rec3(
        {witness->x[0], witness->x[1], witness->x[2]}, counterexample));
    node.children.push_back(derive_rec3(
        {witness->y[0], witness->y[1], witness->y[2]}, counterexample));
  }
  node.yield = {comps[0], comps[1], comps[2]};
  return node;
}

}  // namespace

std::optional<SplitWitness3> find_split3(const Word& w1, const Word& w2,
                                         const Word& w3,
                                         std::uint64_t* scanned) {
  require_o3(w1, w2, w3);
  return find_split3_impl({format_word(w1), format_word(w2), format_word(w3)},
                          scanned);
}

std::optional<AlternatingWitness3> find_alternating_split3(const Word& t1,
                                                           const Word& t2,
                                                           const Word& t3) {
  require_o3(t1, t2, t3);
  const std::string w = format_word(t1) + format_word(t2) + format_word(t3);
  const int m = static_cast<int>(w.size());
  const Prefix prefix(w);
  CutOdometer odo;
  odo.reset(5, m);
  do {
    const auto& c = odo.cuts;
    std::array<int, 3> dx{0, 0, 0};
    const int xa[3][2] = {{0, c[0]}, {c[1], c[2]}, {c[3], c[4]}};
    int len_x = 0;
    for (const auto& r : xa) {
      const auto d = prefix.disp(r[0], r[1]);
      for (int k = 0; k < 3; ++k) dx[k] += d[k];
      len_x += r[1] - r[0];
    }
    if (!zero3(dx) || len_x == 0 || len_x == m) continue;
    AlternatingWitness3 wit;
    std::copy(c.begin(), c.end(), wit.cuts.begin());
    wit.x = {w.substr(0, c[0]), w.substr(c[1], c[2] - c[1]),
             w.substr(c[3], c[4] - c[3])};
    wit.y = {w.substr(c[0], c[1] - c[0]), w.substr(c[2], c[3] - c[2]),
             w.substr(c[4])};
    return wit;
  } while (odo.advance());
  return std::nullopt;
}

std::variant<DerivationTree, Counterexample3> derive3(const Word& w1,
                                                      const Word& w2,
                                                      const Word& w3) {
  require_o3(w1, w2, w3);
  Counterexample3 counterexample;
  try {
    DerivationTree tree = derive_rec3(
        {format_word(w1), format_word(w2), format_word(w3)}, &counterexample);
    const VerifyResult check = verify_tree(tree, o3_grammar());
    if (!check)
      throw std::logic_error("derive3 produced an unverifiable tree: " +
                             check.reason);
    return tree;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Incompleteness) throw;
    return counterexample;
  }
}

namespace {

nlohmann::json arrangement_tokens_json(const Arrangement& arr) {
  nlohmann::json j;
  j["tokens"] = nlohmann::json::array();
  for (const Token& t : arr.tokens) j["tokens"].push_back(t.name());
  j["splits"] = arr.splits;
  return j;
}

}  // namespace

std::string witness_to_json(const SplitWitness& w) {
  nlohmann::json j;
  j["arrangement"] = arrangement_tokens_json(w.arrangement);
  j["cuts"] = w.decomposition.cuts;
  j["p"] = w.decomposition.p_index;
  j["q"] = w.decomposition.q_index;
  j["r"] = w.decomposition.r_index;
  j["s"] = w.decomposition.s_index;
  j["pairing"] = {{w.pairing[0][0], w.pairing[0][1]},
                  {w.pairing[1][0], w.pairing[1][1]}};
  j["quadruple"] = {w.x1, w.x2, w.y1, w.y2};
  return j.dump();
}

SplitWitness witness_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SplitWitness w;
  const auto quad = j.at("quadruple").get<std::vector<std::string>>();
  w.x1 = quad.at(0);
  w.x2 = quad.at(1);
  w.y1 = quad.at(2);
  w.y2 = quad.at(3);
  const auto& arr = j.at("arrangement");
  for (const auto& name : arr.at("tokens")) {
    const std::string s = name.get<std::string>();
    w.arrangement.tokens.push_back(
        Token::var(s[0] == 'x' ? 0 : 1, s[1] - '1'));
  }
  w.arrangement.splits = arr.at("splits").get<std::vector<int>>();
  w.decomposition.cuts = j.at("cuts").get<std::vector<int>>();
  w.decomposition.p_index = j.at("p").get<int>();
  w.decomposition.q_index = j.at("q").get<int>();
  w.decomposition.r_index = j.at("r").get<int>();
  w.decomposition.s_index = j.at("s").get<int>();
  const auto pairing = j.at("pairing").get<std::vector<std::vector<int>>>();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) w.pairing[a][b] = pairing.at(a).at(b);
  std::array<std::string*, 4> slots{&w.x1, &w.x2, &w.y1, &w.y2};
  int arc = 0;
  for (const Token& t : w.arrangement.tokens)
    w.decomposition.arcs[arc++] = *slots[t.child * 2 + t.comp];
  return w;
}

std::string counterexample_to_json(const Counterexample3& c) {
  nlohmann::json j;
  j["search_space_scanned"] = c.search_space_scanned;
  j["words"] = {c.words[0], c.words[1], c.words[2]};
  return j.dump();
}

}  // namespace mixforge
