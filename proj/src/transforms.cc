#include "inka/transforms.h"

#include <cmath>

#include "inka/error.h"

namespace inka {
namespace {

Point centroid(std::span<const Point> pts) {
  Point c;
  if (pts.empty()) return c;
  for (const Point& p : pts) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(pts.size());
  c.y /= static_cast<double>(pts.size());
  return c;
}

Layout scale_about_centroid(const Layout& layout, double f) {
  const Point c = centroid(layout.positions());
  std::vector<Point> out;
  out.reserve(layout.size());
  for (const Point& p : layout.positions()) out.push_back({c.x + f * (p.x - c.x), c.y + f * (p.y - c.y)});
  return Layout(std::move(out));
}

}  // namespace

Layout scale_layout(const Layout& layout, double sigma) {
  if (!(sigma > 0) || !std::isfinite(sigma)) throw InvalidArgument("scale factor must be finite and > 0");
  if (sigma == 1.0) return layout;
  return scale_about_centroid(layout, sigma);
}

BoldDrawing zoom_drawing(const BoldDrawing& d, double zeta) {
  if (!(zeta > 0) || !std::isfinite(zeta)) throw InvalidArgument("zoom factor must be finite and > 0");
  if (zeta == 1.0) return d;
  const double f = std::sqrt(zeta);
  RenderParams p = d.params();
  p.radius *= f;
  p.width *= f;
  return BoldDrawing(d.graph(), scale_about_centroid(d.layout(), f), p);
}

double StubSet::total_length() const {
  double sum = 0.0;
  for (const Segment& s : segments) sum += std::hypot(s.q.x - s.p.x, s.q.y - s.p.y);
  return sum;
}

StubSet partial_edges(const BoldDrawing& d, double p) {
  if (!(p > 0 && p <= 1)) throw InvalidArgument("partial edge ratio must lie in (0, 1]");
  StubSet out;
  out.ratio = p;
  const auto edges = d.graph().edges();
  out.parent_edges.assign(edges.begin(), edges.end());
  const double h = p / 2;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point a = d.layout()[edges[i].u];
    const Point b = d.layout()[edges[i].v];
    if (p == 1.0) {
      out.segments.push_back({a, b});
      out.parent.push_back(i);
      continue;
    }
    const double dx = b.x - a.x, dy = b.y - a.y;
    out.segments.push_back({a, {a.x + h * dx, a.y + h * dy}});
    out.segments.push_back({b, {b.x - h * dx, b.y - h * dy}});
    out.parent.push_back(i);
    out.parent.push_back(i);
  }
  return out;
}

std::int64_t measure_stub_crossings(const StubSet& stubs) {
  return count_crossings_sweep(stubs.segments);
}

InkComponents stub_ink(const BoldDrawing& d, const StubSet& stubs, std::int64_t stub_crossings) {
  const auto& p = d.params();
  return ink_components(d.graph().node_count(), d.graph().edge_count(), p.radius, p.width,
                        stubs.total_length(), stub_crossings);
}

}  // namespace inka
