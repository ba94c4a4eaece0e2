#include "inka/raster.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "inka/error.h"
#include "inka/geometry.h"
#include "inka/io.h"

namespace inka {
namespace {

struct Shape {
  bool disk = false;
  Point c;        // disk centre
  double r = 0;   // disk radius
  Point q[4];     // rectangle corners in order
  double ymin = 0, ymax = 0;
};

struct Grid {
  double x0 = 0, y0 = 0, s = 1;

  // Sample centres (x0 + (i + 0.5) s) inside [a, b].
  std::int64_t first(double a, double origin) const {
    return static_cast<std::int64_t>(std::ceil((a - origin) / s - 0.5));
  }
  std::int64_t last(double b, double origin) const {
    return static_cast<std::int64_t>(std::floor((b - origin) / s - 0.5));
  }
};

// x-extent of the shape on the horizontal line y, if it meets it.
bool span_at(const Shape& sh, double y, double& xa, double& xb) {
  if (sh.disk) {
    const double dy = y - sh.c.y;
    const double h2 = sh.r * sh.r - dy * dy;
    if (h2 < 0) return false;
    const double h = std::sqrt(h2);
    xa = sh.c.x - h;
    xb = sh.c.x + h;
    return true;
  }
  bool any = false;
  for (int k = 0; k < 4; ++k) {
    const Point& a = sh.q[k];
    const Point& b = sh.q[(k + 1) % 4];
    if (a.y == b.y) continue;
    const double lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
    if (y < lo || y > hi) continue;
    const double x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (!any) {
      xa = xb = x;
      any = true;
    } else {
      xa = std::min(xa, x);
      xb = std::max(xb, x);
    }
  }
  return any;
}

}  // namespace

void RasterConfig::validate() const {
  if (resolution < 64) throw InvalidArgument("raster resolution must be at least 64");
  if (supersampling != 1 && supersampling != 2 && supersampling != 4) {
    throw InvalidArgument("supersampling must be 1, 2 or 4");
  }
}

RasterResult rasterize(const BoldDrawing& d, const RasterConfig& cfg) {
  cfg.validate();
  if (d.graph().node_count() == 0) throw InvalidArgument("cannot rasterize an empty drawing");
  const BoundingBox box = drawing_bounds(d);
  const double longer = std::max(box.width(), box.height());
  if (!(longer > 0)) throw InvalidArgument("degenerate bounding box: the drawing has no extent");
  Grid g;
  g.s = longer / (static_cast<double>(cfg.resolution) * cfg.supersampling);
  g.x0 = box.min_x;
  g.y0 = box.min_y;

  const double r = d.params().radius, w = d.params().width;
  std::vector<Shape> shapes;
  if (r > 0) {
    for (const Point& p : d.layout().positions()) {
      Shape sh;
      sh.disk = true;
      sh.c = p;
      sh.r = r;
      sh.ymin = p.y - r;
      sh.ymax = p.y + r;
      shapes.push_back(sh);
    }
  }
  if (w > 0) {
    for (const Segment& seg : edge_segments(d)) {
      const double dx = seg.q.x - seg.p.x, dy = seg.q.y - seg.p.y;
      const double len = std::hypot(dx, dy);
      if (len == 0) continue;
      const double nx = -dy / len * w / 2, ny = dx / len * w / 2;
      Shape sh;
      sh.q[0] = {seg.p.x + nx, seg.p.y + ny};
      sh.q[1] = {seg.q.x + nx, seg.q.y + ny};
      sh.q[2] = {seg.q.x - nx, seg.q.y - ny};
      sh.q[3] = {seg.p.x - nx, seg.p.y - ny};
      sh.ymin = std::min({sh.q[0].y, sh.q[1].y, sh.q[2].y, sh.q[3].y});
      sh.ymax = std::max({sh.q[0].y, sh.q[1].y, sh.q[2].y, sh.q[3].y});
      shapes.push_back(sh);
    }
  }

  // Sweep rows; every active shape contributes one span, spans are merged.
  struct Entry {
    std::int64_t row_lo, row_hi;
    std::size_t shape;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const std::int64_t lo = g.first(shapes[i].ymin, g.y0), hi = g.last(shapes[i].ymax, g.y0);
    if (lo <= hi) entries.push_back({lo, hi, i});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row_lo != b.row_lo ? a.row_lo < b.row_lo : a.shape < b.shape;
  });
  std::vector<Entry> active;
  std::vector<std::pair<std::int64_t, std::int64_t>> spans;
  RasterResult out;
  out.sample_size = g.s;
  std::size_t next = 0;
  std::int64_t row = 0;
  while (next < entries.size() || !active.empty()) {
    if (active.empty()) row = entries[next].row_lo;
    while (next < entries.size() && entries[next].row_lo <= row) active.push_back(entries[next++]);
    const double y = g.y0 + (static_cast<double>(row) + 0.5) * g.s;
    spans.clear();
    for (const Entry& e : active) {
      double xa = 0, xb = 0;
      if (!span_at(shapes[e.shape], y, xa, xb)) continue;
      const std::int64_t a = g.first(xa, g.x0), b = g.last(xb, g.x0);
      if (a <= b) spans.emplace_back(a, b);
    }
    std::sort(spans.begin(), spans.end());
    std::int64_t cur_a = 0, cur_b = -1;
    bool open = false;
    for (const auto& [a, b] : spans) {
      if (open && a <= cur_b + 1) {
        cur_b = std::max(cur_b, b);
      } else {
        if (open) out.samples += cur_b - cur_a + 1;
        cur_a = a;
        cur_b = b;
        open = true;
      }
    }
    if (open) out.samples += cur_b - cur_a + 1;
    std::erase_if(active, [&](const Entry& e) { return e.row_hi <= row; });
    ++row;
  }
  out.area = static_cast<double>(out.samples) * g.s * g.s;
  return out;
}

double rasterize_ink(const BoldDrawing& d, const RasterConfig& cfg) { return rasterize(d, cfg).area; }

std::string render_svg(const BoldDrawing& d) {
  const double r = d.params().radius, w = d.params().width;
  BoundingBox box{0, 0, 0, 0};
  if (d.graph().node_count() > 0) box = drawing_bounds(d);
  double bw = box.width(), bh = box.height();
  if (bw <= 0) bw = 1;
  if (bh <= 0) bh = 1;
  const double scale = 800.0 / std::max(bw, bh);
  // Flip y so that larger y is drawn higher.
  auto X = [&](double x) { return x - box.min_x; };
  auto Y = [&](double y) { return box.max_y - y; };
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.6f}\" height=\"{:.6f}\" "
      "viewBox=\"0 0 {:.6f} {:.6f}\">\n",
      bw * scale, bh * scale, bw, bh);
  out += fmt::format("<g stroke=\"black\" stroke-linecap=\"butt\" stroke-width=\"{:.6f}\" fill=\"none\">\n", w);
  for (const Segment& s : edge_segments(d)) {
    out += fmt::format("<line x1=\"{:.6f}\" y1=\"{:.6f}\" x2=\"{:.6f}\" y2=\"{:.6f}\"/>\n", X(s.p.x), Y(s.p.y),
                       X(s.q.x), Y(s.q.y));
  }
  out += "</g>\n<g fill=\"black\" stroke=\"none\">\n";
  for (const Point& p : d.layout().positions()) {
    out += fmt::format("<circle cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\"/>\n", X(p.x), Y(p.y), r);
  }
  out += "</g>\n</svg>\n";
  return out;
}

void render_svg(const BoldDrawing& d, const std::filesystem::path& path) { write_text_file(path, render_svg(d)); }

}  // namespace inka
