#include "ink/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace ink {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const SentenceSample& s, const RenderOptions& options) {
  require_absolute(s);
  const std::vector<TrajectoryPoint> points = flatten_points(s);

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool any = false;
  for (const TrajectoryPoint& p : points) {
    if (!any) {
      xmin = xmax = p.x;
      ymin = ymax = p.y;
      any = true;
    } else {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double extent_y = ymax - ymin;
  const double scale = extent_y > 0.0 ? options.height_px / extent_y : options.height_px;
  const double width_px = (xmax - xmin) * scale;
  // Trajectory y grows upward, SVG y grows downward.
  auto to_px = [&](const TrajectoryPoint& p) {
    return std::pair<double, double>{options.margin_px + (p.x - xmin) * scale,
                                     options.margin_px + (ymax - p.y) * scale};
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         fmt(width_px + 2.0 * options.margin_px) + "\" height=\"" +
         fmt(options.height_px + 2.0 * options.margin_px) + "\">\n";

  std::vector<std::pair<double, double>> path;
  auto flush = [&]() {
    if (path.size() >= 2) {
      svg += "  <path d=\"M " + fmt(path[0].first) + ' ' + fmt(path[0].second);
      for (std::size_t i = 1; i < path.size(); ++i)
        svg += " L " + fmt(path[i].first) + ' ' + fmt(path[i].second);
      svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
             fmt(options.stroke_width) + "\" stroke-linecap=\"round\"/>\n";
    }
    path.clear();
  };

  std::vector<std::pair<double, double>> cursive_marks;
  for (const TrajectoryPoint& p : points) {
    path.push_back(to_px(p));
    if (p.pen == PenState::PenUp || p.pen == PenState::EndOfChar) {
      flush();
    } else if (p.pen == PenState::CursiveEoc && options.mark_cursive) {
      cursive_marks.push_back(to_px(p));
    }
  }
  flush();

  for (const auto& [cx, cy] : cursive_marks) {
    svg += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
           "\" r=\"" + fmt(options.stroke_width * 1.5) + "\" fill=\"crimson\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ink
