#include "mixforge/svg.hpp"

#include <algorithm>
#include <sstream>

namespace mixforge {

namespace {

constexpr int kScale = 40;
constexpr int kMargin = 40;

const char* kArcColors[4] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e"};

struct Frame {
  std::int64_t min_x, max_x, min_y, max_y;
  std::int64_t px(std::int64_t x) const { return kMargin + (x - min_x) * kScale; }
  std::int64_t py(std::int64_t y) const { return kMargin + (max_y - y) * kScale; }
};

}  // namespace

std::string render_svg(const LatticePath& path,
                       const SvgAnnotations& annotations) {
  if (path.n != 2)
    throw Error(ErrorCode::UnsupportedDimension, "svg output is 2d only");
  Frame f{0, 0, 0, 0};
  for (const Point& p : path.points) {
    f.min_x = std::min(f.min_x, p[0]);
    f.max_x = std::max(f.max_x, p[0]);
    f.min_y = std::min(f.min_y, p[1]);
    f.max_y = std::max(f.max_y, p[1]);
  }
  const std::int64_t width = (f.max_x - f.min_x) * kScale + 2 * kMargin;
  const std::int64_t height = (f.max_y - f.min_y) * kScale + 2 * kMargin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << " " << height << "\">\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" "
         "refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
         "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" "
         "fill=\"#333333\"/></marker></defs>\n";

  svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (std::int64_t x = f.min_x; x <= f.max_x; ++x)
    svg << "<line x1=\"" << f.px(x) << "\" y1=\"" << f.py(f.max_y)
        << "\" x2=\"" << f.px(x) << "\" y2=\"" << f.py(f.min_y) << "\"/>\n";
  for (std::int64_t y = f.min_y; y <= f.max_y; ++y)
    svg << "<line x1=\"" << f.px(f.min_x) << "\" y1=\"" << f.py(y)
        << "\" x2=\"" << f.px(f.max_x) << "\" y2=\"" << f.py(y) << "\"/>\n";
  svg << "</g>\n";

  const int m = path.m();
  auto arc_color = [&](int edge) -> const char* {
    for (std::size_t i = 0; i < annotations.arc_ranges.size(); ++i) {
      const auto& r = annotations.arc_ranges[i];
      if (edge >= r[0] && edge < r[1]) return kArcColors[i % 4];
    }
    return "#333333";
  };
  for (int t = 0; t < m; ++t) {
    const Point& a = path.points[t];
    const Point& b = path.points[t + 1];
    svg << "<line x1=\"" << f.px(a[0]) << "\" y1=\"" << f.py(a[1])
        << "\" x2=\"" << f.px(b[0]) << "\" y2=\"" << f.py(b[1])
        << "\" stroke=\"" << arc_color(t)
        << "\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
  }

  auto marker = [&](const std::optional<int>& idx, const char* name,
                    const char* color) {
    if (!idx || *idx < 0 || *idx > m) return;
    const Point& p = path.points[*idx];
    svg << "<circle cx=\"" << f.px(p[0]) << "\" cy=\"" << f.py(p[1])
        << "\" r=\"5\" fill=\"" << color << "\"/>\n"
        << "<text x=\"" << f.px(p[0]) + 8 << "\" y=\"" << f.py(p[1]) - 8
        << "\" font-size=\"14\" fill=\"" << color << "\">" << name
        << "</text>\n";
  };
  if (m == 0) {
    const Point& origin = path.points.empty() ? Point{0, 0, 0} : path.points[0];
    svg << "<circle cx=\"" << f.px(origin[0]) << "\" cy=\"" << f.py(origin[1])
        << "\" r=\"5\" fill=\"#333333\"/>\n";
  }
  marker(annotations.p, "p", "#000000");
  marker(annotations.q, "q", "#555555");
  marker(annotations.r, "r", "#aa0000");
  marker(annotations.s, "s", "#0000aa");
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mixforge
