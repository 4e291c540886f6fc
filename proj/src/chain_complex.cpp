#include "mixforge/chain_complex.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace mixforge {

namespace {

enum OneCell { kAlpha, kBeta, kGamma, kDelta, kAlphaBar, kBetaBar, kGammaBar, kDeltaBar };

constexpr int kTwoCells = 12, kOneCells = 8, kZeroCells = 4;

void set_column(IntMatrix& mat, int col,
                std::initializer_list<std::pair<int, int>> entries) {
  for (const auto& [row, value] : entries) mat[row][col] = value;
}

std::vector<CellTerm> terms(std::initializer_list<std::pair<int, CellSymbol>> ts) {
  std::vector<CellTerm> out;
  for (const auto& [sign, sym] : ts) out.push_back({sign, sym});
  return out;
}

}  // namespace

CellComplexData build_complex() {
  CellComplexData c;
  c.zero_cells = {"p1", "p2", "p3", "p4"};
  c.one_cells = {"alpha", "beta",      "gamma",     "delta",
                 "alpha_bar", "beta_bar", "gamma_bar", "delta_bar"};
  c.two_cells = {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L"};
  c.d1.assign(kZeroCells, std::vector<std::int64_t>(kOneCells, 0));
  c.d2.assign(kOneCells, std::vector<std::int64_t>(kTwoCells, 0));

  set_column(c.d2, 0, {{kAlpha, -1}, {kGamma, +1}, {kBetaBar, +1}, {kDeltaBar, -1}});
  set_column(c.d2, 1, {{kBeta, -1}, {kGamma, -1}, {kAlphaBar, +1}, {kDeltaBar, +1}});
  set_column(c.d2, 2, {{kBeta, +1}, {kDelta, -1}, {kAlphaBar, -1}, {kGammaBar, +1}});
  set_column(c.d2, 3, {{kAlpha, +1}, {kDelta, +1}, {kBetaBar, -1}, {kGammaBar, -1}});
  set_column(c.d2, 4, {{kAlpha, +1}, {kBeta, +1}});   // E
  set_column(c.d2, 5, {{kAlpha, +1}, {kBeta, +1}});   // F
  set_column(c.d2, 6, {{kAlphaBar, +1}, {kBetaBar, +1}});  // G
  set_column(c.d2, 7, {{kAlphaBar, +1}, {kBetaBar, +1}});  // H
  set_column(c.d2, 8, {{kGamma, +1}, {kDelta, +1}});  // I
  set_column(c.d2, 9, {{kGamma, +1}, {kDelta, +1}});  // J
  set_column(c.d2, 10, {{kGammaBar, +1}, {kDeltaBar, +1}});  // K
  set_column(c.d2, 11, {{kGammaBar, +1}, {kDeltaBar, +1}});  // L

  set_column(c.d1, kAlpha, {{0, -1}, {1, +1}});
  set_column(c.d1, kBeta, {{0, +1}, {1, -1}});
  set_column(c.d1, kGamma, {{0, -1}, {2, +1}});
  set_column(c.d1, kDelta, {{0, +1}, {2, -1}});
  set_column(c.d1, kAlphaBar, {{2, +1}, {3, -1}});
  set_column(c.d1, kBetaBar, {{2, -1}, {3, +1}});
  set_column(c.d1, kGammaBar, {{1, +1}, {3, -1}});
  set_column(c.d1, kDeltaBar, {{1, -1}, {3, +1}});

  using S = CellSymbol;
  for (int i = 0; i < 4; ++i) c.domain_case[i] = 1;
  for (int i = 4; i < 8; ++i) c.domain_case[i] = 2;
  for (int i = 8; i < 12; ++i) c.domain_case[i] = 3;
  c.f_two[0] = terms({{+1, S::PhiX}, {-1, S::PhiP0}, {+1, S::PhiY}, {-1, S::PhiQ}});
  c.f_two[1] = terms({{+1, S::PhiQ}, {-1, S::PhiX}, {+1, S::PhiY}, {-1, S::PhiQ}});
  c.f_two[2] = terms({{+1, S::PhiQ}, {-1, S::PhiX}, {+1, S::PhiP1}, {-1, S::PhiY}});
  c.f_two[3] = terms({{+1, S::PhiX}, {-1, S::PhiP0}, {+1, S::PhiP1}, {-1, S::PhiY}});
  c.f_two[4] = terms({{+1, S::PhiX}, {-1, S::PhiP0}, {+1, S::PhiQ}, {-1, S::PhiY}});
  c.f_two[5] = terms({{+1, S::PhiY}, {-1, S::PhiX}});
  c.f_two[6] = terms({{+1, S::PhiY}, {-1, S::PhiX}, {+1, S::PhiP1}, {-1, S::PhiQ}});
  c.f_two[7] = terms({{+1, S::PhiQ}, {-1, S::PhiY}, {+1, S::PhiP1}, {-1, S::PhiQ},
                      {+1, S::PhiX}, {-1, S::PhiP0}});
  c.f_two[8] = terms({{+1, S::PhiX}, {-1, S::PhiQ}, {+1, S::PhiP1}, {-1, S::PhiY}});
  c.f_two[9] = terms({{+1, S::PhiY}, {-1, S::PhiX}});
  c.f_two[10] = terms({{+1, S::PhiY}, {-1, S::PhiX}, {+1, S::PhiQ}, {-1, S::PhiP0}});
  c.f_two[11] = terms({{+1, S::PhiX}, {-1, S::PhiY}});
  c.f_one[kAlpha] = terms({{+1, S::PhiX}, {-1, S::PhiP0}});
  c.f_one[kBeta] = terms({{+1, S::PhiQ}, {-1, S::PhiX}});
  c.f_one[kGamma] = terms({{+1, S::PhiY}, {-1, S::PhiQ}});
  c.f_one[kDelta] = terms({{+1, S::PhiP1}, {-1, S::PhiY}});
  c.f_one[kAlphaBar] = terms({{+1, S::PhiP0}, {-1, S::PhiX}});
  c.f_one[kBetaBar] = terms({{+1, S::PhiX}, {-1, S::PhiQ}});
  c.f_one[kGammaBar] = terms({{+1, S::PhiQ}, {-1, S::PhiY}});
  c.f_one[kDeltaBar] = terms({{+1, S::PhiY}, {-1, S::PhiP1}});
  c.f_zero[0] = {};
  c.f_zero[1] = terms({{+1, S::PhiQ}, {-1, S::PhiP0}});
  c.f_zero[2] = terms({{+1, S::PhiP1}, {-1, S::PhiQ}});
  c.f_zero[3] = {};
  return c;
}

bool verify_dd_zero(const CellComplexData& c) {
  const std::size_t rows = c.d1.size();
  const std::size_t mid = c.d2.size();
  const std::size_t cols = mid == 0 ? 0 : c.d2[0].size();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < mid; ++k) sum += c.d1[i][k] * c.d2[k][j];
      if (sum != 0) return false;
    }
  return true;
}

namespace {

Chain apply_matrix(const IntMatrix& m, const Chain& v) {
  Chain out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

bool all_zero(const Chain& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

bool is_cycle(const CellComplexData& c, const Chain& chain) {
  if (chain.size() == c.two_cells.size())
    return all_zero(apply_matrix(c.d2, chain));
  if (chain.size() == c.one_cells.size())
    return all_zero(apply_matrix(c.d1, chain));
  throw Error(ErrorCode::DimensionMismatch,
              "chain length matches neither the 2-cells nor the 1-cells");
}

namespace {

struct Frac {
  std::int64_t num = 0, den = 1;

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
};

Frac frac(std::int64_t n, std::int64_t d = 1) {
  Frac f{n, d};
  f.normalize();
  return f;
}
Frac operator*(Frac a, Frac b) { return frac(a.num * b.num, a.den * b.den); }
Frac operator-(Frac a, Frac b) {
  return frac(a.num * b.den - b.num * a.den, a.den * b.den);
}
Frac operator/(Frac a, Frac b) { return frac(a.num * b.den, a.den * b.num); }
bool is_zero(Frac a) { return a.num == 0; }

// Row echelon over Q, returning rank; transforms `rows` in place.
int echelon(std::vector<std::vector<Frac>>& rows) {
  const int nrows = static_cast<int>(rows.size());
  const int ncols = nrows == 0 ? 0 : static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (!is_zero(rows[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || is_zero(rows[r][col])) continue;
      const Frac factor = rows[r][col] / rows[rank][col];
      for (int cc = col; cc < ncols; ++cc)
        rows[r][cc] = rows[r][cc] - factor * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Smith normal form with transform tracking: U * A * V = D.
struct Snf {
  IntMatrix d, u, v;
  int rank = 0;
};

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Snf smith_normal_form(IntMatrix a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Snf s;
  s.u = identity(rows);
  s.v = identity(cols);
  auto row_add = [&](int dst, int src, std::int64_t k) {
    for (int j = 0; j < cols; ++j) a[dst][j] += k * a[src][j];
    for (int j = 0; j < rows; ++j) s.u[dst][j] += k * s.u[src][j];
  };
  auto col_add = [&](int dst, int src, std::int64_t k) {
    for (int i = 0; i < rows; ++i) a[i][dst] += k * a[i][src];
    for (int i = 0; i < cols; ++i) s.v[i][dst] += k * s.v[i][src];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(s.v[r][i], s.v[r][j]);
  };
  auto row_negate = [&](int i) {
    for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < rows; ++j) s.u[i][j] = -s.u[i][j];
  };

  auto diagonalize = [&]() {
    int t = 0;
    while (t < rows && t < cols) {
      // pivot: smallest nonzero absolute value in the remaining block
      int pi = -1, pj = -1;
      std::int64_t best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const std::int64_t v = a[i][j] < 0 ? -a[i][j] : a[i][j];
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;
      row_swap(t, pi);
      col_swap(t, pj);
      if (a[t][t] < 0) row_negate(t);
      bool reduced = true;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_add(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) reduced = false;
        }
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_add(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) reduced = false;
        }
      if (!reduced) continue;  // retry t with a smaller pivot
      ++t;
    }
    return t;
  };
  for (;;) {
    s.rank = diagonalize();
    bool chained = true;
    for (int i = 0; i + 1 < s.rank && chained; ++i) {
      if (a[i + 1][i + 1] % a[i][i] != 0) {
        col_add(i, i + 1, 1);  // reintroduce a[i+1][i+1] into column i
        chained = false;
      }
    }
    if (chained) break;
  }
  s.d = a;
  return s;
}

}  // namespace

BoundaryCertificate is_boundary(const CellComplexData& c, const Chain& chain) {
  if (chain.size() != c.one_cells.size())
    throw Error(ErrorCode::DimensionMismatch, "expected a 1-chain");
  if (!all_zero(apply_matrix(c.d1, chain)))
    throw Error(ErrorCode::NotACycle, "chain is not a 1-cycle");
  const int rows = static_cast<int>(c.one_cells.size());
  const int cols = static_cast<int>(c.two_cells.size());

  // Greedy choice of the lexicographically earliest independent columns.
  std::vector<int> pivots;
  {
    std::vector<std::vector<Frac>> basis;
    for (int j = 0; j < cols; ++j) {
      std::vector<std::vector<Frac>> trial = basis;
      std::vector<Frac> col(rows);
      for (int i = 0; i < rows; ++i) col[i] = frac(c.d2[i][j]);
      trial.push_back(col);
      if (echelon(trial) == static_cast<int>(trial.size())) {
        basis.push_back(col);
        echelon(basis);
        pivots.push_back(j);
      }
    }
  }

  // Solve over the pivot columns with exact rational elimination.
  const int k = static_cast<int>(pivots.size());
  std::vector<std::vector<Frac>> aug(rows, std::vector<Frac>(k + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = frac(c.d2[i][pivots[j]]);
    aug[i][k] = frac(chain[i]);
  }
  echelon(aug);
  std::vector<Frac> solution(k, frac(0));
  for (int i = rows - 1; i >= 0; --i) {
    int lead = -1;
    for (int j = 0; j < k; ++j)
      if (!is_zero(aug[i][j])) {
        lead = j;
        break;
      }
    if (lead < 0) {
      if (!is_zero(aug[i][k])) return {false, {}};  // inconsistent
      continue;
    }
    Frac rhs = aug[i][k];
    for (int j = lead + 1; j < k; ++j)
      rhs = rhs - aug[i][j] * solution[j];
    solution[lead] = rhs / aug[i][lead];
  }
  bool integral = true;
  for (const Frac& f : solution)
    if (f.den != 1) integral = false;
  BoundaryCertificate cert;
  if (integral) {
    cert.bounds = true;
    cert.certificate.assign(cols, 0);
    for (int j = 0; j < k; ++j) cert.certificate[pivots[j]] = solution[j].num;
    return cert;
  }
  // Rational solution exists but is not integral over the pivot columns;
  // decide integrally over all columns via the Smith form.
  Snf s = smith_normal_form(c.d2);
  Chain ub = apply_matrix(s.u, chain);
  Chain y(cols, 0);
  for (int i = 0; i < rows; ++i) {
    const std::int64_t d = i < std::min(rows, cols) ? s.d[i][i] : 0;
    if (d == 0) {
      if (ub[i] != 0) return {false, {}};
    } else {
      if (ub[i] % d != 0) return {false, {}};
      y[i] = ub[i] / d;
    }
  }
  cert.bounds = true;
  cert.certificate = apply_matrix(s.v, y);
  return cert;
}

HomologyReport homology_ranks(const CellComplexData& c) {
  const Snf s1 = smith_normal_form(c.d1);
  const Snf s2 = smith_normal_form(c.d2);
  HomologyReport r;
  const std::int64_t n0 = static_cast<std::int64_t>(c.zero_cells.size());
  const std::int64_t n1 = static_cast<std::int64_t>(c.one_cells.size());
  const std::int64_t n2 = static_cast<std::int64_t>(c.two_cells.size());
  r.b0 = n0 - s1.rank;
  r.b1 = (n1 - s1.rank) - s2.rank;
  r.b2 = n2 - s2.rank;
  for (int i = 0; i < s1.rank; ++i)
    if (s1.d[i][i] > 1) r.h0_torsion.push_back(s1.d[i][i]);
  for (int i = 0; i < s2.rank; ++i)
    if (s2.d[i][i] > 1) r.h1_torsion.push_back(s2.d[i][i]);
  return r;
}

namespace {

struct DirectedEdge {
  int one_cell = 0;
  int tail = 0;
  int head = 0;
};

DirectedEdge directed(const CellComplexData& c, int one_cell, int sign) {
  int tail = -1, head = -1;
  for (std::size_t v = 0; v < c.zero_cells.size(); ++v) {
    if (c.d1[v][one_cell] < 0) tail = static_cast<int>(v);
    if (c.d1[v][one_cell] > 0) head = static_cast<int>(v);
  }
  if (tail < 0 || head < 0)
    throw Error(ErrorCode::AmbiguousCyclicOrder,
                "1-cell lacks distinct endpoints");
  if (sign < 0) std::swap(tail, head);
  return {one_cell, tail, head};
}

// Unique cyclic chaining of the cell's directed boundary edges; throws when
// the endpoint matching admits more than one cycle.
std::vector<DirectedEdge> boundary_cycle(const CellComplexData& c, int cell) {
  std::vector<DirectedEdge> edges;
  for (std::size_t e = 0; e < c.one_cells.size(); ++e) {
    const std::int64_t coef = c.d2[e][cell];
    if (coef == 0) continue;
    if (coef != 1 && coef != -1)
      throw Error(ErrorCode::AmbiguousCyclicOrder,
                  "boundary coefficients must be +-1");
    edges.push_back(directed(c, static_cast<int>(e), static_cast<int>(coef)));
  }
  std::vector<DirectedEdge> order{edges[0]};
  std::vector<bool> used(edges.size(), false);
  used[0] = true;
  std::vector<std::vector<DirectedEdge>> found;
  auto rec = [&](auto&& self) -> void {
    if (order.size() == edges.size()) {
      if (order.back().head == order.front().tail) found.push_back(order);
      return;
    }
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (used[i] || edges[i].tail != order.back().head) continue;
      used[i] = true;
      order.push_back(edges[i]);
      self(self);
      order.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  if (found.size() != 1)
    throw Error(ErrorCode::AmbiguousCyclicOrder,
                "cell " + c.two_cells[cell] + " has " +
                    std::to_string(found.size()) + " boundary cyclic orders");
  return found.front();
}

}  // namespace

LinkGraph link_graph(const CellComplexData& c, int zero_cell) {
  if (zero_cell < 0 || zero_cell >= static_cast<int>(c.zero_cells.size()))
    throw Error(ErrorCode::DimensionMismatch, "no such 0-cell");
  LinkGraph g;
  g.base = c.zero_cells[zero_cell];
  std::vector<int> vertex_of(c.one_cells.size(), -1);
  for (std::size_t e = 0; e < c.one_cells.size(); ++e) {
    if (c.d1[zero_cell][e] != 0) {
      vertex_of[e] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(c.one_cells[e]);
    }
  }
  for (int cell = 0; cell < static_cast<int>(c.two_cells.size()); ++cell) {
    bool touches = false;
    for (std::size_t e = 0; e < c.one_cells.size(); ++e)
      if (c.d2[e][cell] != 0 && vertex_of[e] >= 0) touches = true;
    if (!touches) continue;
    const auto cycle = boundary_cycle(c, cell);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const DirectedEdge& cur = cycle[i];
      const DirectedEdge& nxt = cycle[(i + 1) % cycle.size()];
      if (cur.head != zero_cell) continue;
      g.edges.push_back({c.two_cells[cell], vertex_of[cur.one_cell],
                         vertex_of[nxt.one_cell]});
    }
  }
  return g;
}

namespace {

Vec2 point2(const LatticePath& path, int t) {
  return {path.points[t][0], path.points[t][1]};
}

bool in_domain(int domain_case, int x, int y, int q, int m) {
  switch (domain_case) {
    case 1: return 0 <= x && x <= q && q <= y && y <= m;
    case 2: return 0 <= x && x <= y && y <= q;
    case 3: return q <= x && x <= y && y <= m;
  }
  return false;
}

}  // namespace

Vec2 evaluate_cell_function(const CellComplexData& c, int two_cell,
                            const LatticePath& path, int x, int y,
                            int q_index) {
  if (path.n != 2)
    throw Error(ErrorCode::UnsupportedDimension, "cell functions are planar");
  const int m = path.m();
  if (two_cell < 0 || two_cell >= kTwoCells)
    throw Error(ErrorCode::DimensionMismatch, "no such 2-cell");
  if (q_index < 0 || q_index > m)
    throw Error(ErrorCode::OutOfDomain, "q outside the parameter range");
  if (!in_domain(c.domain_case[two_cell], x, y, q_index, m))
    throw Error(ErrorCode::OutOfDomain,
                "(x, y) outside the domain of cell " + c.two_cells[two_cell]);
  Vec2 value{0, 0};
  for (const CellTerm& term : c.f_two[two_cell]) {
    Vec2 v{0, 0};
    switch (term.symbol) {
      case CellSymbol::PhiX: v = point2(path, x); break;
      case CellSymbol::PhiY: v = point2(path, y); break;
      case CellSymbol::PhiP0: v = point2(path, 0); break;
      case CellSymbol::PhiQ: v = point2(path, q_index); break;
      case CellSymbol::PhiP1: v = point2(path, m); break;
    }
    value[0] += term.sign * v[0];
    value[1] += term.sign * v[1];
  }
  return value;
}

Vec2 evaluate_cell_function(const CellComplexData& c, int two_cell,
                            const LatticePath& path, int x, int y) {
  const int m = path.m();
  if (m % 2 != 0) throw Error(ErrorCode::OddLength, "q = m/2 needs even m");
  return evaluate_cell_function(c, two_cell, path, x, y, m / 2);
}

namespace {

// Parameter points that sit on a cell's p1 or p4 vertex, where f vanishes
// identically; for the bigons the contracted x = y side is such a vertex.
bool degenerate_point(int cell, int x, int y, int q, int m) {
  const bool corner_pq = x == 0 && y == q;
  const bool corner_qp = x == q && y == m;
  switch (cell) {
    case 0: case 1: case 2: case 3: return corner_pq || corner_qp;
    case 4: case 6: return corner_pq;
    case 5: case 7: return x == y;
    case 8: case 10: return corner_qp;
    case 9: case 11: return x == y;
  }
  return false;
}

}  // namespace

std::vector<CellZero> zero_scan(const CellComplexData& c,
                                const LatticePath& path, int q_index) {
  if (!path.closed())
    throw Error(ErrorCode::NotClosed, "zero scan needs a closed path");
  const int m = path.m();
  std::vector<CellZero> zeros;
  for (int cell = 0; cell < kTwoCells; ++cell) {
    for (int x = 0; x <= m; ++x) {
      for (int y = x; y <= m; ++y) {
        if (!in_domain(c.domain_case[cell], x, y, q_index, m)) continue;
        if (degenerate_point(cell, x, y, q_index, m)) continue;
        const Vec2 v = evaluate_cell_function(c, cell, path, x, y, q_index);
        if (v[0] == 0 && v[1] == 0) zeros.push_back({cell, x, y});
      }
    }
  }
  return zeros;
}

std::vector<CellZero> zero_scan(const CellComplexData& c,
                                const LatticePath& path) {
  const int m = path.m();
  if (m % 2 != 0) throw Error(ErrorCode::OddLength, "q = m/2 needs even m");
  return zero_scan(c, path, m / 2);
}

std::string complex_to_json(const CellComplexData& c) {
  nlohmann::json j;
  j["zero_cells"] = c.zero_cells;
  j["one_cells"] = c.one_cells;
  j["two_cells"] = c.two_cells;
  j["d1"] = c.d1;
  j["d2"] = c.d2;
  return j.dump();
}

}  // namespace mixforge
