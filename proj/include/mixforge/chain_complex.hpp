#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mixforge/geometry.hpp"

namespace mixforge {

using Chain = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Symbols of the cell-function expressions: phi at the free parameters x
/// and y, and at the landmarks 0, q and m.
enum class CellSymbol { PhiX, PhiY, PhiP0, PhiQ, PhiP1 };

struct CellTerm {
  int sign = +1;
  CellSymbol symbol = CellSymbol::PhiX;
};

/// The finite 2-complex: four 0-cells p1..p4, eight 1-cells alpha..delta_bar,
/// twelve 2-cells A..L, the two boundary matrices, and the signed term lists
/// of the cell functions. Square cells A-D live on the case-1 square, E-H on
/// the case-2 triangle, I-L on the case-3 triangle.
struct CellComplexData {
  std::vector<std::string> zero_cells;
  std::vector<std::string> one_cells;
  std::vector<std::string> two_cells;
  IntMatrix d1;  // rows: zero cells, columns: one cells
  IntMatrix d2;  // rows: one cells, columns: two cells
  std::array<int, 12> domain_case{};
  std::array<std::vector<CellTerm>, 12> f_two;
  std::array<std::vector<CellTerm>, 8> f_one;
  std::array<std::vector<CellTerm>, 4> f_zero;
};

/// Transcription of the twelve d(2-cell) and eight d(1-cell) equations.
CellComplexData build_complex();

/// d1 * d2 == 0.
bool verify_dd_zero(const CellComplexData& c);

/// True iff the boundary of the chain vanishes; the chain dimension is read
/// off its length (12 for 2-chains, 8 for 1-chains). Throws
/// DimensionMismatch otherwise.
bool is_cycle(const CellComplexData& c, const Chain& chain);

struct BoundaryCertificate {
  bool bounds = false;
  Chain certificate;  // 2-chain u with d2 u = chain, when bounds
};

/// Exact integer solve of d2 * u = chain. The certificate is canonical: it
/// uses only the lexicographically earliest independent columns. Throws
/// NotACycle when the chain is not a 1-cycle.
BoundaryCertificate is_boundary(const CellComplexData& c, const Chain& chain);

struct HomologyReport {
  std::int64_t b0 = 0, b1 = 0, b2 = 0;
  std::vector<std::int64_t> h0_torsion, h1_torsion;
  std::int64_t euler_characteristic() const { return b0 - b1 + b2; }
};

/// Betti numbers and torsion via exact Smith normal form.
HomologyReport homology_ranks(const CellComplexData& c);

struct LinkGraph {
  std::string base;
  std::vector<std::string> vertices;  // incident 1-cells
  struct Edge {
    std::string cell;  // the 2-cell whose corner produces the edge
    int v1 = 0, v2 = 0;
  };
  std::vector<Edge> edges;
};

/// The link of a 0-cell: one vertex per incident 1-cell, one edge per 2-cell
/// corner at the vertex, found by reconstructing each 2-cell's cyclic
/// boundary from its signed d list. Throws AmbiguousCyclicOrder if the
/// reconstruction is not unique.
LinkGraph link_graph(const CellComplexData& c, int zero_cell);

/// Exact evaluation of a 2-cell's function on a discrete path at integer
/// parameters (x, y), with q at `q_index`. Throws OutOfDomain outside the
/// cell's case domain.
Vec2 evaluate_cell_function(const CellComplexData& c, int two_cell,
                            const LatticePath& path, int x, int y,
                            int q_index);

/// Same with q at m/2 (m must be even).
Vec2 evaluate_cell_function(const CellComplexData& c, int two_cell,
                            const LatticePath& path, int x, int y);

struct CellZero {
  int cell = 0;
  int x = 0;
  int y = 0;

  auto operator<=>(const CellZero&) const = default;
};

/// All integer parameter pairs in all twelve cells where the cell function
/// vanishes, excluding the parameter points that map to the degenerate
/// vertices p1 and p4 of each cell (for the bigons that includes the
/// contracted x = y side).
std::vector<CellZero> zero_scan(const CellComplexData& c,
                                const LatticePath& path, int q_index);
std::vector<CellZero> zero_scan(const CellComplexData& c,
                                const LatticePath& path);

std::string complex_to_json(const CellComplexData& c);

}  // namespace mixforge
