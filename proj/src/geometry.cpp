#include "mixforge/geometry.hpp"

#include <algorithm>
#include <map>

namespace mixforge {

LatticePath to_path(const Word& w) {
  if (w.n > kMaxDimension)
    throw Error(ErrorCode::UnsupportedDimension, "paths live in Z^2 or Z^3");
  LatticePath path;
  path.n = w.n;
  path.points.reserve(w.letters.size() + 1);
  Point cur{0, 0, 0};
  path.points.push_back(cur);
  for (const Letter& l : w.letters) {
    cur[l.axis - 1] += l.sign;
    path.points.push_back(cur);
  }
  return path;
}

namespace {

ReductionCase classify_pair(int t1, int t2, int q, int m) {
  if (q == 0 || q == m) return t1 == 0 ? ReductionCase::Case1 : ReductionCase::Case4;
  if (t1 == 0) return t2 < q ? ReductionCase::Case1 : ReductionCase::Case2;
  if (t1 == q || t2 == q) return ReductionCase::Case3;
  if (t1 < q && t2 > q) return ReductionCase::Case5;
  return ReductionCase::Case4;
}

}  // namespace

std::vector<IntersectionRecord> self_intersections(const LatticePath& path,
                                                   int q_index) {
  const int m = path.m();
  if (m > 0 && !path.closed())
    throw Error(ErrorCode::NotClosed, "path is not closed");
  std::vector<IntersectionRecord> records;
  for (int t1 = 0; t1 < m; ++t1) {
    for (int t2 = t1 + 1; t2 < m; ++t2) {
      if (path.points[t1] != path.points[t2]) continue;
      if (t1 == 0 && t2 == q_index) continue;  // the p-q pair
      records.push_back({t1, t2, classify_pair(t1, t2, q_index, m)});
    }
  }
  return records;
}

std::vector<IntersectionRecord> self_intersections(const LatticePath& path) {
  const int m = path.m();
  if (m % 2 != 0)
    throw Error(ErrorCode::OddLength, "q = m/2 undefined for odd m");
  return self_intersections(path, m / 2);
}

bool is_embedded(const LatticePath& path) {
  const int m = path.m();
  std::map<Point, int> seen;
  for (int t = 0; t < m; ++t) {
    if (!seen.emplace(path.points[t], t).second) return false;
  }
  return true;
}

std::optional<Case5Split> find_case5_pair(const Word& w1, const Word& w2) {
  const int q = static_cast<int>(w1.size());
  const LatticePath path = to_path(concat(w1, w2));
  const int m = path.m();
  for (int t1 = 1; t1 < q; ++t1)
    for (int t2 = q + 1; t2 < m; ++t2)
      if (path.points[t1] == path.points[t2])
        return Case5Split{w1, w2, t1, t2};
  return std::nullopt;
}

SimplifyOutcome simplify_loop(const Word& w1_in, const Word& w2_in) {
  Word w1 = w1_in, w2 = w2_in;
  const Word whole = concat(w1, w2);
  if (!in_on(whole))
    throw Error(ErrorCode::NotInOn, "w1w2 is not in O_n");
  SimplifyOutcome out;
  for (;;) {
    const int q = static_cast<int>(w1.size());
    const Word loop = concat(w1, w2);
    const LatticePath path = to_path(loop);
    const int m = path.m();
    auto records = self_intersections(path, q);
    // With a degenerate cut (q at an endpoint) the whole loop is itself a
    // closed subloop anchored at p and is deletable.
    if ((q == 0 || q == m) && m > 0)
      records.push_back({0, m, ReductionCase::Case1});
    if (records.empty()) break;
    auto lowest = *std::min_element(
        records.begin(), records.end(),
        [](const IntersectionRecord& a, const IntersectionRecord& b) {
          return std::pair(a.t1, a.t2) < std::pair(b.t1, b.t2);
        });
    if (lowest.case_label == ReductionCase::Case5) {
      out.split = Case5Split{w1, w2, lowest.t1, lowest.t2};
      break;
    }
    int del_begin = 0, del_end = 0;
    switch (lowest.case_label) {
      case ReductionCase::Case1:
        del_begin = lowest.t1;
        del_end = lowest.t2;
        break;
      case ReductionCase::Case2:
        del_begin = lowest.t2;
        del_end = m;
        break;
      default:  // cases 3 and 4 remove the enclosed subloop
        del_begin = lowest.t1;
        del_end = lowest.t2;
        break;
    }
    Word removed;
    removed.n = loop.n;
    removed.letters.assign(loop.letters.begin() + del_begin,
                           loop.letters.begin() + del_end);
    out.deletions.push_back(
        {lowest.t1, lowest.t2, lowest.case_label, format_word(removed)});
    Word trimmed = loop;
    trimmed.letters.erase(trimmed.letters.begin() + del_begin,
                          trimmed.letters.begin() + del_end);
    const int new_q = q - (std::min(del_end, q) - std::min(del_begin, q));
    w1.letters.assign(trimmed.letters.begin(),
                      trimmed.letters.begin() + new_q);
    w2.letters.assign(trimmed.letters.begin() + new_q, trimmed.letters.end());
  }
  out.reduced_w1 = w1;
  out.reduced_w2 = w2;
  return out;
}

namespace {

std::int64_t cross(const Vec2& a, const Vec2& b) {
  return a[0] * b[1] - a[1] * b[0];
}
std::int64_t dot(const Vec2& a, const Vec2& b) {
  return a[0] * b[0] + a[1] * b[1];
}

// Angular region of u measured from the reference direction d:
// 0 parallel, 1 in (0,pi), 2 antiparallel, 3 in (pi,2pi).
int region(const Vec2& d, const Vec2& u) {
  const std::int64_t c = cross(d, u);
  if (c > 0) return 1;
  if (c < 0) return 3;
  return dot(d, u) > 0 ? 0 : 2;
}

// Strict comparison of angles from d, both in [0, 2pi).
bool angle_less(const Vec2& d, const Vec2& u, const Vec2& v) {
  const int ru = region(d, u), rv = region(d, v);
  if (ru != rv) return ru < rv;
  if (ru == 0 || ru == 2) return false;
  return cross(u, v) > 0;
}

// Signed crossing of the reference direction d by the minor-arc turn from u
// to v. Antiparallel turns count as +pi.
int step_crossing(const Vec2& d, const Vec2& u, const Vec2& v) {
  const std::int64_t c = cross(u, v);
  const std::int64_t dt = dot(u, v);
  if (c == 0 && dt > 0) return 0;  // no motion
  const bool ccw = c > 0 || (c == 0 && dt < 0);
  if (ccw) return angle_less(d, v, u) ? +1 : 0;
  return angle_less(d, u, v) ? -1 : 0;
}

}  // namespace

std::int64_t winding_number(const std::vector<Vec2>& vectors, bool closed) {
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (vectors[i][0] == 0 && vectors[i][1] == 0)
      throw Error(ErrorCode::ZeroVector,
                  "zero vector at index " + std::to_string(i),
                  static_cast<std::ptrdiff_t>(i));
  if (vectors.empty()) {
    if (closed)
      throw Error(ErrorCode::NotClosed, "empty sequence has no closed turning");
    return 0;
  }
  const Vec2 d = vectors.front();
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < vectors.size(); ++i)
    total += step_crossing(d, vectors[i], vectors[i + 1]);
  if (closed) total += step_crossing(d, vectors.back(), vectors.front());
  return total;
}

WindingReport link_cycle_degree(const LatticePath& path, PathHalf half,
                                int delta) {
  if (path.n != 2)
    throw Error(ErrorCode::UnsupportedDimension, "degrees are planar");
  const int m = path.m();
  if (m % 2 != 0) throw Error(ErrorCode::OddLength, "m must be even");
  if (!path.closed()) throw Error(ErrorCode::NotClosed, "path must be closed");
  if (delta < 1 || delta >= m / 2)
    throw Error(ErrorCode::OutOfDomain,
                "delta must satisfy 1 <= delta < m/2");
  if (!is_embedded(path))
    throw Error(ErrorCode::NotEmbedded, "path has self intersections");
  const int h = m / 2;
  auto chord = [&](int x) -> Vec2 {
    return {path.points[x + delta][0] - path.points[x][0],
            path.points[x + delta][1] - path.points[x][1]};
  };
  WindingReport report;
  report.u_alpha = chord(0);
  report.u_beta = chord(h - delta);
  report.u_gamma = chord(h);
  report.u_delta = chord(m - delta);
  const Vec2 u_start = half == PathHalf::First ? report.u_alpha : report.u_gamma;
  const Vec2 u_end = half == PathHalf::First ? report.u_beta : report.u_delta;
  if (cross(u_start, u_end) == 0 && dot(u_start, u_end) < 0)
    throw Error(ErrorCode::AntiparallelTangents,
                "chord directions at the half's endpoints are antiparallel");
  std::vector<Vec2> sweep;
  const int x0 = half == PathHalf::First ? 0 : h;
  for (int x = x0; x <= x0 + h - delta; ++x) sweep.push_back(chord(x));
  report.cycle_id = half == PathHalf::First ? LinkCycleId::AlphaBeta
                                            : LinkCycleId::GammaDelta;
  report.degree = winding_number(sweep, /*closed=*/true);
  report.case_class = report.degree > 0   ? DegreeCase::Positive
                      : report.degree < 0 ? DegreeCase::Negative
                                          : DegreeCase::Zero;
  return report;
}

}  // namespace mixforge
