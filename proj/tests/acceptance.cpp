// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Each criterion is checked exactly, with independent
// oracles where the expectation is itself computed.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mixforge/chain_complex.hpp"
#include "mixforge/geometry.hpp"
#include "mixforge/grammar.hpp"
#include "mixforge/splitter.hpp"
#include "mixforge/words.hpp"

using namespace mixforge;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("%s  %d  %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::vector<std::pair<Word, Word>> all_splits(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t cut = 0; cut <= w.size(); ++cut) {
    Word a, b;
    a.n = b.n = w.n;
    a.letters.assign(w.letters.begin(), w.letters.begin() + cut);
    b.letters.assign(w.letters.begin() + cut, w.letters.end());
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------- criterion 1
void criterion_1() {
  const std::map<int, std::size_t> expected_sizes{
      {0, 1}, {2, 4}, {4, 36}, {6, 400}, {8, 4900}};
  bool pass = true;

  // independent confirmation of the expected counts: raw radix-4 scan
  for (const auto& [len, size] : expected_sizes) {
    std::size_t brute = 0;
    std::vector<int> digits(len, 0);
    const char letters[4] = {'a', 'A', 'b', 'B'};
    for (;;) {
      int da = 0, db = 0;
      for (int d : digits) {
        if (d == 0) ++da;
        if (d == 1) --da;
        if (d == 2) ++db;
        if (d == 3) --db;
      }
      (void)letters;
      if (da == 0 && db == 0) ++brute;
      int i = len - 1;
      while (i >= 0 && digits[i] == 3) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
    if (brute != size) pass = false;
  }

  const Grammar g = grammar_o2();
  const auto closure = enumerate_derivable(g, 8);
  std::set<std::string> closure_words;
  for (const auto& tuple : closure) closure_words.insert(tuple[0] + tuple[1]);
  std::map<int, std::size_t> closure_sizes;
  for (const auto& w : closure_words) ++closure_sizes[static_cast<int>(w.size())];
  if (closure_sizes != expected_sizes) pass = false;

  std::set<std::string> enumerated;
  for (const Word& w : enumerate_on_up_to(8, 2)) enumerated.insert(format_word(w));
  if (closure_words != enumerated) pass = false;

  report(1, pass,
         "grammar closure equals O2 through length 8, sizes "
         "1/4/36/400/4900 confirmed by brute force");
}

// ---------------------------------------------------------------- criterion 2
void criterion_2() {
  bool pass = true;
  std::size_t checked = 0;
  for (int len = 4; len <= 10 && pass; len += 2) {
    for (const Word& w : enumerate_on(len, 2)) {
      for (const auto& [a, b] : all_splits(w)) {
        const auto wit = find_split(a, b);
        if (!wit) {
          pass = false;
          std::printf("  no split for (%s, %s)\n", format_word(a).c_str(),
                      format_word(b).c_str());
          break;
        }
        // conditions (1)-(4), re-checked here
        const WordTuple rebuilt =
            apply_arrangement(wit->arrangement, {WordTuple{wit->x1, wit->x2},
                                                 WordTuple{wit->y1, wit->y2}});
        const std::size_t lx = wit->x1.size() + wit->x2.size();
        const std::size_t ly = wit->y1.size() + wit->y2.size();
        bool ok = rebuilt == WordTuple{format_word(a), format_word(b)};
        ok = ok && in_on(parse_word(wit->x1 + wit->x2, 2));
        ok = ok && in_on(parse_word(wit->y1 + wit->y2, 2));
        ok = ok && std::max(lx, ly) < w.size();
        for (const auto& pair : wit->pairing) {
          const Displacement sum = wit->decomposition.arc_vectors[pair[0]] +
                                   wit->decomposition.arc_vectors[pair[1]];
          ok = ok && sum.is_zero();
        }
        if (!ok) pass = false;
        ++checked;
      }
      if (!pass) break;
    }
  }
  report(2, pass,
         "find_split returns a condition-(1)-(4) witness for every split of "
         "every balanced word of length 4..10 (" +
             std::to_string(checked) + " splits, zero NoSplit)");
}

// ---------------------------------------------------------------- criterion 3
void criterion_3() {
  bool pass = true;
  const Grammar g = grammar_o2();
  const Word empty = parse_word("", 2);
  std::size_t trees = 0;
  for (int len = 0; len <= 10 && pass; len += 2) {
    for (const Word& w : enumerate_on(len, 2)) {
      const DerivationTree tree = derive(w, empty);
      if (!verify_tree(tree, g) ||
          count_pair_insert_nodes(tree) != len / 2 ||
          tree.yield != WordTuple{format_word(w), ""}) {
        pass = false;
        break;
      }
      ++trees;
    }
  }
  report(3, pass,
         "derive(w, eps) yields a verified tree with exactly |w|/2 "
         "pair-insert nodes for every w up to length 10 (" +
             std::to_string(trees) + " trees)");
}

// ---------------------------------------------------------------- criterion 4
void criterion_4() {
  const CellComplexData c = build_complex();
  bool pass = verify_dd_zero(c);
  auto two_chain = [](std::initializer_list<std::pair<int, int>> entries) {
    Chain chain(12, 0);
    for (const auto& [i, v] : entries) chain[i] = v;
    return chain;
  };
  pass = pass && is_cycle(c, two_chain({{4, 1}, {5, -1}}));
  pass = pass && is_cycle(c, two_chain({{6, 1}, {7, -1}}));
  pass = pass && is_cycle(c, two_chain({{8, 1}, {9, -1}}));
  pass = pass && is_cycle(c, two_chain({{10, 1}, {11, -1}}));
  pass = pass && is_cycle(c, two_chain({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  Chain ab(8, 0);
  ab[0] = ab[1] = 1;
  const auto cert = is_boundary(c, ab);
  Chain expected_cert(12, 0);
  expected_cert[4] = 1;
  pass = pass && cert.bounds && cert.certificate == expected_cert;
  const LinkGraph l1 = link_graph(c, 0);
  const LinkGraph l4 = link_graph(c, 3);
  pass = pass && l1.vertices.size() == 4 && l1.edges.size() == 8;
  pass = pass && l4.vertices.size() == 4 && l4.edges.size() == 8;
  for (const auto& v : l4.vertices)
    for (const auto& u : l1.vertices)
      if (u == v) pass = false;
  const HomologyReport h = homology_ranks(c);
  pass = pass && h.euler_characteristic() == 8;
  report(4, pass,
         "chain complex: dd = 0, the five 2-cycles, alpha+beta bounds with "
         "certificate E, links 4v/8e and disjoint, Euler characteristic 8");
}

// ---------------------------------------------------------------- criterion 5
void criterion_5() {
  const CellComplexData c = build_complex();
  bool pass = true;
  std::size_t zero_count = 0, scans = 0;
  for (int len = 0; len <= 8 && pass; len += 2) {
    for (const Word& w : enumerate_on(len, 2)) {
      const LatticePath path = to_path(w);
      const int m = path.m();
      for (int q = 0; q <= m && pass; ++q) {
        const auto zeros = zero_scan(c, path, q);
        ++scans;
        std::set<CellZero> reported(zeros.begin(), zeros.end());
        zero_count += zeros.size();
        auto seg = [&](int b, int e) {
          return Vec2{path.points[e][0] - path.points[b][0],
                      path.points[e][1] - path.points[b][1]};
        };
        // arc vectors per case, combination per cell, exclusion per vertex
        for (int cell = 0; cell < 12 && pass; ++cell) {
          for (int x = 0; x <= m; ++x) {
            for (int y = x; y <= m; ++y) {
              const bool in_dom = cell < 4   ? (x <= q && q <= y)
                                  : cell < 8 ? (y <= q)
                                             : (q <= x);
              if (!in_dom) continue;
              Vec2 v1{}, v2{}, v3{}, v4{};
              if (cell < 4) {
                v1 = seg(0, x); v2 = seg(x, q); v3 = seg(q, y); v4 = seg(y, m);
              } else if (cell < 8) {
                v1 = seg(0, x); v2 = seg(x, y); v3 = seg(y, q); v4 = seg(q, m);
              } else {
                v1 = seg(0, q); v2 = seg(q, x); v3 = seg(x, y); v4 = seg(y, m);
              }
              auto add = [](Vec2 u, Vec2 v) {
                return Vec2{u[0] + v[0], u[1] + v[1]};
              };
              Vec2 value{};
              bool pairing_cell = true;
              Vec2 first{}, second{};
              switch (cell) {
                case 0: first = add(v1, v3); second = add(v2, v4); break;
                case 1: first = add(v2, v3); second = add(v1, v4); break;
                case 2: first = add(v2, v4); second = add(v1, v3); break;
                case 3: first = add(v1, v4); second = add(v2, v3); break;
                case 4: first = add(v1, v3); second = add(v2, v4); break;
                case 6: first = add(v2, v4); second = add(v1, v3); break;
                case 8: first = add(v2, v4); second = add(v1, v3); break;
                case 10: first = add(v3, v1); second = add(v2, v4); break;
                case 5: value = v2; pairing_cell = false; break;
                case 7: value = {-v2[0], -v2[1]}; pairing_cell = false; break;
                case 9: value = v3; pairing_cell = false; break;
                case 11: value = {-v3[0], -v3[1]}; pairing_cell = false; break;
              }
              if (pairing_cell) value = first;
              const bool excluded =
                  (cell < 4 && ((x == 0 && y == q) || (x == q && y == m))) ||
                  ((cell == 4 || cell == 6) && x == 0 && y == q) ||
                  ((cell == 5 || cell == 7) && x == y) ||
                  ((cell == 8 || cell == 10) && x == q && y == m) ||
                  ((cell == 9 || cell == 11) && x == y);
              const bool zero = value[0] == 0 && value[1] == 0;
              if (reported.count({cell, x, y}) !=
                  static_cast<std::size_t>(zero && !excluded)) {
                pass = false;
                break;
              }
              if (zero && !excluded && pairing_cell) {
                // the complementary pair must vanish too: a zero-sum pairing
                if (first[0] != 0 || first[1] != 0 || second[0] != 0 ||
                    second[1] != 0)
                  pass = false;
              }
              if (zero && !excluded && !pairing_cell) {
                // self-intersection cells certify a balanced deleted subword
                const bool coincide = cell < 8
                                          ? path.points[x] == path.points[y]
                                          : path.points[x] == path.points[y];
                if (!coincide) pass = false;
              }
            }
          }
        }
      }
    }
  }
  report(5, pass,
         "every cell-function zero matches the independent arc arithmetic "
         "and certifies a zero-sum pairing (" +
             std::to_string(zero_count) + " zeros over " +
             std::to_string(scans) + " scans)");
}

// ---------------------------------------------------------------- criterion 6
void criterion_6() {
  // (a) alternating decomposition for every O3 word of length 4..8
  bool pass_a = true;
  std::size_t witnesses = 0;
  const Word empty3 = parse_word("", 3);
  for (int len = 4; len <= 8 && pass_a; len += 2) {
    for (const Word& w : enumerate_on(len, 3)) {
      const auto wit = find_alternating_split3(w, empty3, empty3);
      if (!wit) {
        pass_a = false;
        std::printf("  counterexample finding: %s has no alternating "
                    "decomposition\n",
                    format_word(w).c_str());
        break;
      }
      const std::string xs = wit->x[0] + wit->x[1] + wit->x[2];
      const std::string ys = wit->y[0] + wit->y[1] + wit->y[2];
      const std::string glued = wit->x[0] + wit->y[0] + wit->x[1] + wit->y[1] +
                                wit->x[2] + wit->y[2];
      bool ok = glued == format_word(w);
      ok = ok && in_on(parse_word(xs, 3)) && in_on(parse_word(ys, 3));
      ok = ok && xs.size() < w.size() && ys.size() < w.size();
      if (!ok) pass_a = false;
      ++witnesses;
    }
  }
  report(6, pass_a,
         "(a) every O3 word of length 4..8 admits an alternating six-block "
         "decomposition (" +
             std::to_string(witnesses) + " witnesses)");

  // (b) closure soundness and desk-scale equality for O3 at bound 6
  const Grammar g3 = grammar_o3();
  const auto closure = enumerate_derivable(g3, 6);
  std::set<std::string> closure_words;
  bool sound = true;
  for (const auto& tuple : closure) {
    std::string word;
    for (const auto& comp : tuple) word += comp;
    closure_words.insert(word);
    if (!in_on(parse_word(word, 3))) sound = false;
  }
  std::set<std::string> enumerated;
  for (const Word& w : enumerate_on_up_to(6, 3))
    enumerated.insert(format_word(w));
  const bool equal = closure_words == enumerated;
  report(6, sound && equal,
         std::string("(b) arity-3 closure at bound 6 is a subset of O3 (") +
             (sound ? "exact" : "VIOLATED") + ") and equality holds: " +
             (equal ? "equal" : "unequal"));
}

// ---------------------------------------------------------------- criterion 7
void criterion_7() {
  bool pass = true;
  std::size_t embedded_count = 0;

  auto edge_dirs = [](const LatticePath& p) {
    std::vector<Vec2> dirs;
    for (int t = 0; t < p.m(); ++t)
      dirs.push_back({p.points[t + 1][0] - p.points[t][0],
                      p.points[t + 1][1] - p.points[t][1]});
    return dirs;
  };
  auto rotate_word = [](const Word& w) {
    Word out;
    out.n = 2;
    for (const Letter& l : w.letters)
      out.letters.push_back(l.axis == 1 ? Letter{2, l.sign}
                                        : Letter{1, -l.sign});
    return out;
  };
  auto antiparallel = [](const Vec2& u, const Vec2& v) {
    return u[0] * v[1] - u[1] * v[0] == 0 && u[0] * v[0] + u[1] * v[1] < 0;
  };

  for (int len = 2; len <= 10 && pass; len += 2) {
    for (const Word& w : enumerate_on(len, 2)) {
      const LatticePath p = to_path(w);
      if (!is_embedded(p)) continue;
      ++embedded_count;
      const auto dirs = edge_dirs(p);
      const std::int64_t r = winding_number(dirs, true);
      if (r != 1 && r != -1) {
        pass = false;
        break;
      }
      // reversal negation, where the turning sequence is unambiguous
      bool ap_free = true;
      for (std::size_t i = 0; i < dirs.size(); ++i)
        if (antiparallel(dirs[i], dirs[(i + 1) % dirs.size()])) ap_free = false;
      if (ap_free) {
        std::vector<Vec2> rev(dirs.rbegin(), dirs.rend());
        for (Vec2& v : rev) v = {-v[0], -v[1]};
        if (winding_number(rev, true) != -r) pass = false;
      }
      // rotation invariance and the exact antiparallel error condition
      for (const PathHalf half : {PathHalf::First, PathHalf::Second}) {
        const int h = p.m() / 2;
        if (h < 2) continue;
        const int x0 = half == PathHalf::First ? 0 : h;
        const Vec2 u_start = {p.points[x0 + 1][0] - p.points[x0][0],
                              p.points[x0 + 1][1] - p.points[x0][1]};
        const Vec2 u_end = {p.points[x0 + h][0] - p.points[x0 + h - 1][0],
                            p.points[x0 + h][1] - p.points[x0 + h - 1][1]};
        const bool expect_error = antiparallel(u_start, u_end);
        bool threw = false;
        std::int64_t degree = 0;
        try {
          degree = link_cycle_degree(p, half, 1).degree;
        } catch (const Error& e) {
          threw = e.code() == ErrorCode::AntiparallelTangents;
          if (!threw) throw;
        }
        if (threw != expect_error) {
          pass = false;
          break;
        }
        if (threw) continue;
        Word rotated = w;
        for (int k = 0; k < 3; ++k) {
          rotated = rotate_word(rotated);
          if (link_cycle_degree(to_path(rotated), half, 1).degree != degree) {
            pass = false;
            break;
          }
        }
      }
      if (!pass) break;
    }
  }
  report(7, pass,
         "rotation number is +-1 on all " + std::to_string(embedded_count) +
             " embedded loops up to length 10; winding negates under "
             "reversal; link degrees are rotation invariant and error "
             "exactly on antiparallel tangents");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  const auto dt = std::chrono::duration_cast<std::chrono::seconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::printf("%s: %d criterion failure(s), %llds total\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures, static_cast<long long>(dt));
  return failures;
}
