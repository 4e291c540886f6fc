#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixforge/words.hpp"

namespace mixforge {

using Point = std::array<std::int64_t, kMaxDimension>;
using Vec2 = std::array<std::int64_t, 2>;

/// Integer lattice realization of a word: points[0] is the origin and
/// points[k+1] - points[k] is the unit step of letter k. The discrete
/// parameter t runs over 0..m with m = word length.
struct LatticePath {
  int n = 2;
  std::vector<Point> points;

  int m() const { return static_cast<int>(points.size()) - 1; }
  bool closed() const { return !points.empty() && points.front() == points.back(); }
};

LatticePath to_path(const Word& w);

/// The five reduction cases of the self-intersection analysis, relative to
/// the cuts p (parameter 0) and q.
enum class ReductionCase { Case1 = 1, Case2, Case3, Case4, Case5 };

struct IntersectionRecord {
  int t1 = 0;
  int t2 = 0;
  ReductionCase case_label = ReductionCase::Case1;

  bool operator==(const IntersectionRecord&) const = default;
};

/// All coincident parameter pairs of a closed path, labeled relative to the
/// cuts p = 0 and q. The pairs (0,q), (q,m) and (0,m) are the p/q
/// coincidences and the closure itself; they are not reported. Pairs with
/// t2 = m duplicate a pair anchored at 0 and are likewise not reported.
std::vector<IntersectionRecord> self_intersections(const LatticePath& path,
                                                   int q_index);

/// Convenience form with q at m/2; throws OddLength when m is odd.
std::vector<IntersectionRecord> self_intersections(const LatticePath& path);

/// No repeated lattice points except start = end.
bool is_embedded(const LatticePath& path);

struct Deletion {
  int t1 = 0;
  int t2 = 0;
  ReductionCase case_label = ReductionCase::Case1;
  std::string removed;
};

/// A case-5 coincidence on the (possibly reduced) pair: phi(t1) = phi(t2)
/// with 0 < t1 < |w1| < t2 < m, so r = t1 and s = t2 split the loop with
/// v1+v4 = v2+v3 = 0.
struct Case5Split {
  Word w1, w2;
  int t1 = 0;
  int t2 = 0;
};

struct SimplifyOutcome {
  Word reduced_w1, reduced_w2;
  std::vector<Deletion> deletions;
  std::optional<Case5Split> split;

  bool embedded() const { return !split.has_value(); }
};

/// Repeatedly applies the reduction cases to the loop of w1w2 with cuts
/// p = 0 and q = |w1|, always taking the lowest (t1,t2) coincidence first.
/// Cases 1-4 delete the closed subloop; case 5 stops and reports the split.
SimplifyOutcome simplify_loop(const Word& w1, const Word& w2);

/// Lowest case-5 coincidence of the loop of w1w2 (q = |w1|), if any.
std::optional<Case5Split> find_case5_pair(const Word& w1, const Word& w2);

/// Total signed turning of a direction sequence divided by 2*pi, computed
/// with integer cross/dot sign tests only. `closed` treats the sequence
/// cyclically (the wrap-around turn is included). Consecutive antiparallel
/// directions turn by +pi. Throws ZeroVector(index); NotClosed on an empty
/// closed request.
std::int64_t winding_number(const std::vector<Vec2>& vectors, bool closed);

enum class LinkCycleId { AlphaBeta, GammaDelta, AlphaBarBetaBar, GammaBarDeltaBar };
enum class DegreeCase { Positive = 1, Negative = 2, Zero = 3 };
enum class PathHalf { First, Second };

struct WindingReport {
  LinkCycleId cycle_id = LinkCycleId::AlphaBeta;
  std::int64_t degree = 0;
  DegreeCase case_class = DegreeCase::Zero;
  Vec2 u_alpha{}, u_beta{}, u_gamma{}, u_delta{};
};

/// Degree of the chord map around the alpha-beta cycle (half = First) or the
/// gamma-delta cycle (half = Second): the sweep phi(x+delta)-phi(x) across
/// the chosen half, closed by the shorter rotation from its last chord back
/// to its first. q sits at m/2.
WindingReport link_cycle_degree(const LatticePath& path, PathHalf half,
                                int delta);

}  // namespace mixforge
