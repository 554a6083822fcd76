#include "hivecomb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace hivecomb {

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::max(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

// Distance along (dx, dy) from inside the box to its edge.
double exit_distance(const Box& b, double x, double y, double dx, double dy) {
  double t = std::numeric_limits<double>::max();
  if (dx > 1e-12) t = std::min(t, (b.x1 - x) / dx);
  if (dx < -1e-12) t = std::min(t, (b.x0 - x) / dx);
  if (dy > 1e-12) t = std::min(t, (b.y1 - y) / dy);
  if (dy < -1e-12) t = std::min(t, (b.y0 - y) / dy);
  return std::max(t, 0.0);
}

}  // namespace

std::string render_svg(const Diagram& m, const SvgOptions& options) {
  Box box;
  for (const auto& v : m.vertices()) {
    const auto [x, y] = screen_coordinates(v.location);
    box.add(x, y);
  }
  for (const auto& s : m.segments()) {
    const auto [x, y] = screen_coordinates(s.base);
    box.add(x, y);
  }
  if (m.segments().empty()) box.add(0, 0);
  box.x0 -= options.margin;
  box.y0 -= options.margin;
  box.x1 += options.margin;
  box.y1 += options.margin;

  const double k = options.scale;
  auto px = [&](double x) { return (x - box.x0) * k; };
  auto py = [&](double y) { return (box.y1 - y) * k; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (box.x1 - box.x0) * k << "\" height=\""
      << (box.y1 - box.y0) * k << "\">\n";
  out << "<style>path{stroke:black;fill:none}circle{stroke:black}.Y,.inverted-Y{fill:white}"
         ".crossing{fill:gray}.rake{fill:orange}.5-valent{fill:blue}.6-valent{fill:red}"
         "text{font:12px sans-serif}</style>\n";
  for (const auto& s : m.segments()) {
    const auto [x, y] = screen_coordinates(s.base);
    double ex, ey;
    if (s.length.is_infinite()) {
      const auto [ux, uy] = screen_coordinates(s.base + PlanePoint(unit_vector(s.direction)));
      const double dx = ux - x, dy = uy - y, len = std::hypot(dx, dy);
      const double t = exit_distance(box, x, y, dx / len, dy / len);
      ex = x + t * dx / len;
      ey = y + t * dy / len;
    } else {
      std::tie(ex, ey) = screen_coordinates(s.end());
    }
    const double width = 1.5 * s.multiplicity.convert_to<double>();
    out << "<path d=\"M " << px(x) << ' ' << py(y) << " L " << px(ex) << ' ' << py(ey) << "\" stroke-width=\"" << width
        << "\"/>\n";
    if (s.multiplicity != 1)
      out << "<text x=\"" << px((x + ex) / 2) + 4 << "\" y=\"" << py((y + ey) / 2) - 4 << "\">" << to_string(s.multiplicity)
          << "</text>\n";
  }
  for (const auto& v : m.vertices()) {
    const auto [x, y] = screen_coordinates(v.location);
    out << "<circle class=\"v-" << to_string(v.kind) << "\" cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hivecomb
