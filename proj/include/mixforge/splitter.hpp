#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mixforge/grammar.hpp"
#include "mixforge/words.hpp"

namespace mixforge {

/// The four arcs cut out of the cyclic word w1w2 by p (always 0), q (always
/// |w1|) and the block boundaries. The arcs are the witness blocks in cyclic
/// order from p; `cuts` lists the boundaries between consecutive blocks, and
/// r/s are the first two of them. One-sided arrangements (all four blocks in
/// one component) have a third boundary, recoverable from the arcs.
struct ArcDecomposition {
  int p_index = 0;
  int q_index = 0;
  int r_index = 0;
  int s_index = 0;
  std::vector<int> cuts;
  std::array<std::string, 4> arcs;
  std::array<Displacement, 4> arc_vectors;
};

/// Certifies one application of the length-reducing merge decomposition:
/// cuts plus a zero-sum pairing of the arc vectors, the quadruple, and the
/// merge arrangement that reassembles (w1, w2) from it.
struct SplitWitness {
  enum class Origin { Endpoint, Case5, Search };
  Origin origin = Origin::Search;
  ArcDecomposition decomposition;
  std::array<std::array<int, 2>, 2> pairing{};  // arc indices: x pair, y pair
  std::string x1, x2, y1, y2;
  Arrangement arrangement;
  std::size_t arrangement_index = 0;
};

/// Canonical witness for (w1, w2): the endpoint fast path first, then the
/// case-5 fast path, then the lexicographically least (arrangement index,
/// cut positions) hit of the exhaustive search. Empty only when no witness
/// exists. Throws NotInOn.
std::optional<SplitWitness> find_split(const Word& w1, const Word& w2);

/// Derivation tree with yield (w1, w2), built by recursive splitting.
/// Throws NotInOn, and Incompleteness if the split search fails at total
/// length >= 4.
DerivationTree derive(const Word& w1, const Word& w2);

struct SplitWitness3 {
  std::array<std::string, 3> x{};
  std::array<std::string, 3> y{};
  Arrangement arrangement;
  std::size_t arrangement_index = 0;
  std::vector<int> cuts;
};

/// Merge witness for the arity-3 grammar; same canonical order as
/// find_split. `scanned` (optional) receives the number of candidate
/// (arrangement, cuts) pairs examined.
std::optional<SplitWitness3> find_split3(const Word& w1, const Word& w2,
                                         const Word& w3,
                                         std::uint64_t* scanned = nullptr);

/// Six-piece alternating decomposition of the word t1t2t3 (Remark-style):
/// t1t2t3 = x1 y1 x2 y2 x3 y3 with both alternate triples in O3 and strictly
/// shorter. Pieces may be empty; the two triples may not both be.
struct AlternatingWitness3 {
  std::array<int, 5> cuts{};
  std::array<std::string, 3> x{};
  std::array<std::string, 3> y{};
};

std::optional<AlternatingWitness3> find_alternating_split3(const Word& t1,
                                                           const Word& t2,
                                                           const Word& t3);

struct Counterexample3 {
  std::array<std::string, 3> words{};
  std::uint64_t search_space_scanned = 0;
};

/// Same recursion as derive over the arity-3 grammar. A failed split search
/// at length >= 4 is a reportable finding, returned as a Counterexample3.
std::variant<DerivationTree, Counterexample3> derive3(const Word& w1,
                                                      const Word& w2,
                                                      const Word& w3);

std::string witness_to_json(const SplitWitness& w);
SplitWitness witness_from_json(const std::string& text);
std::string counterexample_to_json(const Counterexample3& c);

}  // namespace mixforge
