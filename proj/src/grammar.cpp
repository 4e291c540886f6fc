#include "mixforge/grammar.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include <json.hpp>

namespace mixforge {

std::string Token::name() const {
  if (kind == Kind::Lit) return std::string(1, lit.to_char());
  return std::string(child == 0 ? "x" : "y") + std::to_string(comp + 1);
}

Token Token::var(int child, int comp) {
  Token t;
  t.kind = Kind::Var;
  t.child = static_cast<std::uint8_t>(child);
  t.comp = static_cast<std::uint8_t>(comp);
  return t;
}

Token Token::literal(Letter l) {
  Token t;
  t.kind = Kind::Lit;
  t.lit = l;
  return t;
}

bool operator<(const Token& a, const Token& b) {
  auto key = [](const Token& t) {
    return t.kind == Token::Kind::Var
               ? std::tuple(0, static_cast<int>(t.child), static_cast<int>(t.comp))
               : std::tuple(1, t.lit.order(), 0);
  };
  return key(a) < key(b);
}

bool operator<(const Arrangement& a, const Arrangement& b) {
  if (a.tokens != b.tokens)
    return std::lexicographical_compare(a.tokens.begin(), a.tokens.end(),
                                        b.tokens.begin(), b.tokens.end());
  return a.splits < b.splits;
}

namespace {

// All splits of `count` tokens into `groups` consecutive, possibly empty
// groups, as non-decreasing cumulative boundary tuples in lexicographic
// order.
std::vector<std::vector<int>> split_patterns(int count, int groups) {
  std::vector<std::vector<int>> out;
  const int k = groups - 1;
  std::vector<int> cur(k, 0);
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == count) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
  return out;
}

std::vector<Arrangement> make_arrangements(std::vector<Token> blocks,
                                           int head_arity) {
  std::sort(blocks.begin(), blocks.end());
  std::vector<Arrangement> out;
  const auto patterns =
      split_patterns(static_cast<int>(blocks.size()), head_arity);
  do {
    for (const auto& splits : patterns) {
      Arrangement arr;
      arr.tokens = blocks;
      arr.splits = splits;
      out.push_back(std::move(arr));
    }
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Token> family_blocks(const RuleFamily& family) {
  std::vector<Token> blocks;
  for (std::size_t c = 0; c < family.child_arities.size(); ++c)
    for (int k = 0; k < family.child_arities[c]; ++k)
      blocks.push_back(Token::var(static_cast<int>(c), k));
  if (family.kind == RuleKind::PairInsert) {
    blocks.push_back(Token::literal(Letter{family.axis, +1}));
    blocks.push_back(Token::literal(Letter{family.axis, -1}));
  }
  return blocks;
}

Grammar make_grammar(int n, int arity) {
  Grammar g;
  g.n = n;
  g.arity = arity;

  g.start.kind = RuleKind::Start;
  g.start.head_arity = 1;
  g.start.child_arities = {arity};
  Arrangement start_arr;
  for (int k = 0; k < arity; ++k) start_arr.tokens.push_back(Token::var(0, k));
  g.start.arrangements = {start_arr};

  for (int axis = 1; axis <= n; ++axis) {
    RuleFamily fam;
    fam.kind = RuleKind::PairInsert;
    fam.axis = axis;
    fam.head_arity = arity;
    fam.child_arities = {arity};
    fam.arrangements = make_arrangements(family_blocks(fam), arity);
    g.pair_inserts.push_back(std::move(fam));
  }

  g.merge.kind = RuleKind::Merge;
  g.merge.head_arity = arity;
  g.merge.child_arities = {arity, arity};
  g.merge.arrangements = make_arrangements(family_blocks(g.merge), arity);

  g.axiom.kind = RuleKind::Axiom;
  g.axiom.head_arity = arity;
  return g;
}

}  // namespace

Grammar grammar_o2() { return make_grammar(2, 2); }
Grammar grammar_o3() { return make_grammar(3, 3); }

std::vector<Arrangement> enumerate_arrangements(const RuleFamily& family) {
  if (family.kind == RuleKind::Axiom) return {};
  if (family.kind == RuleKind::Start) return family.arrangements;
  return make_arrangements(family_blocks(family), family.head_arity);
}

WordTuple apply_arrangement(const Arrangement& arr,
                            const std::vector<WordTuple>& child_yields) {
  WordTuple head(arr.head_arity());
  for (int comp = 0; comp < arr.head_arity(); ++comp) {
    std::string& s = head[comp];
    for (int i = arr.group_begin(comp); i < arr.group_end(comp); ++i) {
      const Token& t = arr.tokens[i];
      if (t.kind == Token::Kind::Lit) {
        s.push_back(t.lit.to_char());
      } else {
        if (t.child >= child_yields.size() ||
            t.comp >= child_yields[t.child].size())
          throw Error(ErrorCode::ArityMismatch,
                      "variable " + t.name() + " has no matching child component");
        s += child_yields[t.child][t.comp];
      }
    }
  }
  return head;
}

bool check_step(const WordTuple& head_yield, const Arrangement& arr,
                const std::vector<WordTuple>& child_yields) {
  if (static_cast<int>(head_yield.size()) != arr.head_arity())
    throw Error(ErrorCode::ArityMismatch, "head arity mismatch");
  return apply_arrangement(arr, child_yields) == head_yield;
}

namespace {

bool family_contains(const RuleFamily& family, const Arrangement& arr) {
  return std::binary_search(family.arrangements.begin(),
                            family.arrangements.end(), arr);
}

VerifyResult fail(const std::string& path, const std::string& reason) {
  return {false, path, reason};
}

VerifyResult verify_node(const DerivationTree& node, const Grammar& g,
                         const std::string& path) {
  const int arity = g.arity;
  switch (node.rule) {
    case RuleKind::Axiom: {
      if (!node.children.empty()) return fail(path, "axiom has children");
      if (static_cast<int>(node.yield.size()) != arity)
        return fail(path, "axiom yield arity");
      for (const auto& s : node.yield)
        if (!s.empty()) return fail(path, "axiom yield must be empty words");
      return {};
    }
    case RuleKind::Start: {
      if (node.children.size() != 1) return fail(path, "start needs one child");
      if (node.yield.size() != 1) return fail(path, "start yield arity");
      if (!(node.arrangement == g.start.arrangements.front()))
        return fail(path, "start arrangement is not rule 1");
      if (!check_step(node.yield, node.arrangement, {node.children[0].yield}))
        return fail(path, "start concatenation mismatch");
      break;
    }
    case RuleKind::PairInsert: {
      if (node.children.size() != 1) return fail(path, "pair needs one child");
      if (node.axis < 1 || node.axis > g.n) return fail(path, "pair axis");
      const RuleFamily& fam = g.pair_inserts[node.axis - 1];
      if (!family_contains(fam, node.arrangement))
        return fail(path, "arrangement not in pair family");
      if (static_cast<int>(node.yield.size()) != arity)
        return fail(path, "pair yield arity");
      if (!check_step(node.yield, node.arrangement, {node.children[0].yield}))
        return fail(path, "pair substitution mismatch");
      break;
    }
    case RuleKind::Merge: {
      if (node.children.size() != 2) return fail(path, "merge needs two children");
      if (!family_contains(g.merge, node.arrangement))
        return fail(path, "arrangement not in merge family");
      if (static_cast<int>(node.yield.size()) != arity)
        return fail(path, "merge yield arity");
      if (!check_step(node.yield, node.arrangement,
                      {node.children[0].yield, node.children[1].yield}))
        return fail(path, "merge substitution mismatch");
      break;
    }
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    auto r = verify_node(node.children[i], g, path + "/" + std::to_string(i));
    if (!r) return r;
  }
  return {};
}

}  // namespace

VerifyResult verify_tree(const DerivationTree& tree, const Grammar& g) {
  try {
    return verify_node(tree, g, "");
  } catch (const Error& e) {
    return {false, "", e.what()};
  }
}

int count_pair_insert_nodes(const DerivationTree& tree) {
  int count = tree.rule == RuleKind::PairInsert ? 1 : 0;
  for (const auto& child : tree.children) count += count_pair_insert_nodes(child);
  return count;
}

namespace {

std::size_t total_length(const WordTuple& t) {
  std::size_t n = 0;
  for (const auto& s : t) n += s.size();
  return n;
}

// Distinct rearrangements of the given blocks over `arity` components;
// equivalent to applying every family arrangement but deduplicated at the
// string level.
void emit_rearrangements(std::vector<std::string> blocks, int arity,
                         std::size_t bound, std::set<WordTuple>& sink,
                         std::deque<WordTuple>& queue) {
  // Empty blocks never change a group's concatenation.
  blocks.erase(std::remove(blocks.begin(), blocks.end(), std::string()),
               blocks.end());
  std::sort(blocks.begin(), blocks.end());
  const int count = static_cast<int>(blocks.size());
  const int k = arity - 1;
  do {
    std::vector<int> cuts(k, 0);
    for (;;) {
      WordTuple head(arity);
      int prev = 0;
      for (int c = 0; c < arity; ++c) {
        const int end = c == arity - 1 ? count : cuts[c];
        for (int i = prev; i < end; ++i) head[c] += blocks[i];
        prev = end;
      }
      if (total_length(head) <= bound && sink.insert(head).second)
        queue.push_back(head);
      int i = k - 1;
      while (i >= 0 && cuts[i] == count) --i;
      if (i < 0) break;
      ++cuts[i];
      for (int j = i + 1; j < k; ++j) cuts[j] = cuts[i];
    }
  } while (std::next_permutation(blocks.begin(), blocks.end()));
}

}  // namespace

std::set<WordTuple> enumerate_derivable(const Grammar& g, int max_total_length,
                                        int cap) {
  if (max_total_length > cap)
    throw Error(ErrorCode::ResourceBound,
                "closure bound " + std::to_string(max_total_length) +
                    " exceeds cap " + std::to_string(cap));
  const std::size_t bound = static_cast<std::size_t>(std::max(max_total_length, 0));
  std::set<WordTuple> known;
  std::deque<WordTuple> queue;
  WordTuple axiom(g.arity);
  known.insert(axiom);
  queue.push_back(axiom);
  std::vector<WordTuple> processed;
  while (!queue.empty()) {
    WordTuple u = queue.front();
    queue.pop_front();
    // PairInsert on every axis
    if (total_length(u) + 2 <= bound) {
      for (int axis = 1; axis <= g.n; ++axis) {
        std::vector<std::string> blocks(u.begin(), u.end());
        blocks.push_back(std::string(1, Letter{axis, +1}.to_char()));
        blocks.push_back(std::string(1, Letter{axis, -1}.to_char()));
        emit_rearrangements(std::move(blocks), g.arity, bound, known, queue);
      }
    }
    // Merge with every tuple seen so far (including u itself)
    processed.push_back(u);
    for (const WordTuple& v : processed) {
      if (total_length(u) + total_length(v) > bound) continue;
      std::vector<std::string> blocks(u.begin(), u.end());
      blocks.insert(blocks.end(), v.begin(), v.end());
      emit_rearrangements(std::move(blocks), g.arity, bound, known, queue);
    }
  }
  return known;
}

namespace {

nlohmann::json arrangement_to_json(const Arrangement& arr) {
  nlohmann::json j;
  j["tokens"] = nlohmann::json::array();
  for (const Token& t : arr.tokens) j["tokens"].push_back(t.name());
  j["splits"] = arr.splits;
  return j;
}

Arrangement arrangement_from_json(const nlohmann::json& j) {
  Arrangement arr;
  for (const auto& name : j.at("tokens")) {
    const std::string s = name.get<std::string>();
    if (s.size() == 2 && (s[0] == 'x' || s[0] == 'y'))
      arr.tokens.push_back(Token::var(s[0] == 'x' ? 0 : 1, s[1] - '1'));
    else if (s.size() == 1)
      arr.tokens.push_back(Token::literal(Letter::from_char(s[0])));
    else
      throw Error(ErrorCode::InvalidCharacter, "bad token " + s);
  }
  arr.splits = j.at("splits").get<std::vector<int>>();
  return arr;
}

const char* rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::Axiom: return "axiom";
    case RuleKind::PairInsert: return "pair";
    case RuleKind::Merge: return "merge";
    case RuleKind::Start: return "start";
  }
  return "axiom";
}

nlohmann::json tree_to_json_impl(const DerivationTree& t) {
  nlohmann::json j;
  j["rule"] = rule_name(t.rule);
  if (t.rule == RuleKind::PairInsert) j["axis"] = t.axis;
  if (t.rule != RuleKind::Axiom) j["arrangement"] = arrangement_to_json(t.arrangement);
  j["children"] = nlohmann::json::array();
  for (const auto& c : t.children) j["children"].push_back(tree_to_json_impl(c));
  j["yield"] = t.yield;
  return j;
}

DerivationTree tree_from_json_impl(const nlohmann::json& j) {
  DerivationTree t;
  const std::string rule = j.at("rule").get<std::string>();
  if (rule == "axiom") t.rule = RuleKind::Axiom;
  else if (rule == "pair") t.rule = RuleKind::PairInsert;
  else if (rule == "merge") t.rule = RuleKind::Merge;
  else if (rule == "start") t.rule = RuleKind::Start;
  else throw Error(ErrorCode::Io, "unknown rule " + rule);
  if (j.contains("axis")) t.axis = j.at("axis").get<int>();
  if (j.contains("arrangement"))
    t.arrangement = arrangement_from_json(j.at("arrangement"));
  for (const auto& c : j.at("children")) t.children.push_back(tree_from_json_impl(c));
  t.yield = j.at("yield").get<WordTuple>();
  return t;
}

}  // namespace

std::string tree_to_json(const DerivationTree& tree) {
  return tree_to_json_impl(tree).dump();
}

DerivationTree tree_from_json(const std::string& text) {
  return tree_from_json_impl(nlohmann::json::parse(text));
}

}  // namespace mixforge
