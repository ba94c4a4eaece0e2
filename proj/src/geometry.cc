#include "inka/geometry.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "exact.h"
#include "inka/error.h"

namespace inka {

using detail::orient_sign;

namespace {

bool boxes_overlap(const Segment& a, const Segment& b) {
  return std::max(std::min(a.p.x, a.q.x), std::min(b.p.x, b.q.x)) <=
             std::min(std::max(a.p.x, a.q.x), std::max(b.p.x, b.q.x)) &&
         std::max(std::min(a.p.y, a.q.y), std::min(b.p.y, b.q.y)) <=
             std::min(std::max(a.p.y, a.q.y), std::max(b.p.y, b.q.y));
}

// c lies on the closed segment [a, b], given that a, b, c are collinear.
bool on_collinear_segment(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

Point crossing_point(const Segment& a, const Segment& b) {
  const double d1x = a.q.x - a.p.x, d1y = a.q.y - a.p.y;
  const double d2x = b.q.x - b.p.x, d2y = b.q.y - b.p.y;
  const double den = d1x * d2y - d1y * d2x;
  const double t = ((b.p.x - a.p.x) * d2y - (b.p.y - a.p.y) * d2x) / den;
  return {a.p.x + t * d1x, a.p.y + t * d1y};
}

double crossing_sine(const Segment& a, const Segment& b) {
  const double d1x = a.q.x - a.p.x, d1y = a.q.y - a.p.y;
  const double d2x = b.q.x - b.p.x, d2y = b.q.y - b.p.y;
  return std::abs(d1x * d2y - d1y * d2x) / (std::hypot(d1x, d1y) * std::hypot(d2x, d2y));
}

}  // namespace

SegmentRelation classify_segments(const Segment& s1, const Segment& s2) {
  if (!boxes_overlap(s1, s2)) return SegmentRelation::kDisjoint;
  if (s1.p == s1.q || s2.p == s2.q) {
    const Segment& pt = s1.p == s1.q ? s1 : s2;
    const Segment& other = s1.p == s1.q ? s2 : s1;
    if (other.p == other.q) return pt.p == other.p ? SegmentRelation::kTouching : SegmentRelation::kDisjoint;
    return orient_sign(other.p, other.q, pt.p) == 0 && on_collinear_segment(other.p, other.q, pt.p)
               ? SegmentRelation::kTouching
               : SegmentRelation::kDisjoint;
  }
  const int o1 = orient_sign(s1.p, s1.q, s2.p);
  const int o2 = orient_sign(s1.p, s1.q, s2.q);
  const int o3 = orient_sign(s2.p, s2.q, s1.p);
  const int o4 = orient_sign(s2.p, s2.q, s1.q);

  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::kProperCrossing;

  if (o1 == 0 && o2 == 0) {
    // Collinear (or degenerate). Overlap means more than one shared point.
    const bool horizontal_key = std::abs(s1.q.x - s1.p.x) + std::abs(s2.q.x - s2.p.x) >=
                                std::abs(s1.q.y - s1.p.y) + std::abs(s2.q.y - s2.p.y);
    auto key = [&](const Point& p) { return horizontal_key ? p.x : p.y; };
    const double lo = std::max(std::min(key(s1.p), key(s1.q)), std::min(key(s2.p), key(s2.q)));
    const double hi = std::min(std::max(key(s1.p), key(s1.q)), std::max(key(s2.p), key(s2.q)));
    if (lo < hi) return SegmentRelation::kCollinearOverlap;
    if (lo <= hi) return SegmentRelation::kTouching;
    return SegmentRelation::kDisjoint;
  }

  if ((o1 == 0 && on_collinear_segment(s1.p, s1.q, s2.p)) ||
      (o2 == 0 && on_collinear_segment(s1.p, s1.q, s2.q)) ||
      (o3 == 0 && on_collinear_segment(s2.p, s2.q, s1.p)) ||
      (o4 == 0 && on_collinear_segment(s2.p, s2.q, s1.q))) {
    return SegmentRelation::kTouching;
  }
  return SegmentRelation::kDisjoint;
}

std::optional<Point> segments_intersect(const Segment& s1, const Segment& s2) {
  if (classify_segments(s1, s2) != SegmentRelation::kProperCrossing) return std::nullopt;
  return crossing_point(s1, s2);
}

std::vector<Segment> edge_segments(const Graph& g, const Layout& layout) {
  if (layout.size() != g.node_count()) throw InvalidArgument("layout does not match graph");
  std::vector<Segment> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back({layout[e.u], layout[e.v]});
  return out;
}

std::vector<Segment> edge_segments(const BoldDrawing& d) {
  return edge_segments(d.graph(), d.layout());
}

namespace {

// Calls visit(i, j, relation) for every pair whose bounding boxes overlap.
// Segments are sorted by min x so the inner loop stops early.
template <typename Visit>
void for_each_candidate_pair(std::span<const Segment> segments, Visit&& visit) {
  std::vector<std::size_t> order(segments.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto min_x = [&](std::size_t i) { return std::min(segments[i].p.x, segments[i].q.x); };
  auto max_x = [&](std::size_t i) { return std::max(segments[i].p.x, segments[i].q.x); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return min_x(a) < min_x(b) || (min_x(a) == min_x(b) && a < b); });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    const double right = max_x(i);
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const std::size_t j = order[oj];
      if (min_x(j) > right) break;
      visit(std::min(i, j), std::max(i, j), classify_segments(segments[i], segments[j]));
    }
  }
}

}  // namespace

CrossingCount count_crossings_bruteforce(std::span<const Segment> segments) {
  CrossingCount out;
  for_each_candidate_pair(segments, [&](std::size_t, std::size_t, SegmentRelation rel) {
    if (rel == SegmentRelation::kProperCrossing) ++out.crossings;
    if (rel == SegmentRelation::kCollinearOverlap) ++out.collinear_overlaps;
  });
  return out;
}

CrossingCount count_crossings_bruteforce(const BoldDrawing& d) {
  const auto segs = edge_segments(d);
  return count_crossings_bruteforce(segs);
}

std::int64_t count_crossings_sweep(const BoldDrawing& d) {
  const auto segs = edge_segments(d);
  return count_crossings_sweep(segs);
}

std::vector<Crossing> list_crossings(std::span<const Segment> segments) {
  std::vector<Crossing> out;
  for_each_candidate_pair(segments, [&](std::size_t i, std::size_t j, SegmentRelation rel) {
    if (rel != SegmentRelation::kProperCrossing) return;
    out.push_back({i, j, crossing_point(segments[i], segments[j]),
                   crossing_sine(segments[i], segments[j])});
  });
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  return out;
}

EdgeLengths edge_lengths(const BoldDrawing& d) {
  EdgeLengths out;
  out.lengths.reserve(d.graph().edge_count());
  for (const Edge& e : d.graph().edges()) {
    const Point& a = d.layout()[e.u];
    const Point& b = d.layout()[e.v];
    const double l = std::hypot(b.x - a.x, b.y - a.y);
    out.lengths.push_back(l);
    out.total += l;
  }
  return out;
}

BoundingBox drawing_bounds(const BoldDrawing& d) {
  const auto positions = d.layout().positions();
  if (positions.empty()) return {};
  const double r = d.params().radius;
  const double half_w = d.params().width / 2.0;
  BoundingBox box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  auto grow = [&box](double x, double y, double pad) {
    box.min_x = std::min(box.min_x, x - pad);
    box.min_y = std::min(box.min_y, y - pad);
    box.max_x = std::max(box.max_x, x + pad);
    box.max_y = std::max(box.max_y, y + pad);
  };
  for (const Point& p : positions) grow(p.x, p.y, r);
  if (half_w > 0.0) {
    // Rectangle corners sit w/2 off each endpoint, perpendicular to the edge.
    for (const Edge& e : d.graph().edges()) {
      const Point& a = positions[e.u];
      const Point& b = positions[e.v];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      if (len == 0.0) continue;
      const double nx = -(b.y - a.y) / len * half_w;
      const double ny = (b.x - a.x) / len * half_w;
      for (const Point& c : {a, b}) {
        grow(c.x + nx, c.y + ny, 0.0);
        grow(c.x - nx, c.y - ny, 0.0);
      }
    }
  }
  return box;
}

AreaMode AreaMode::parse(const std::string& text) {
  if (text == "auto") return automatic();
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value) || value < 0.0) {
    throw InvalidArgument("area must be 'auto' or a non-negative number, got '" + text + "'");
  }
  return fixed_value(value);
}

double bounding_area(const BoldDrawing& d, const AreaMode& mode) {
  if (mode.fixed) return *mode.fixed;
  if (d.graph().node_count() == 0) return 0.0;
  return drawing_bounds(d).area();
}

PropernessReport check_proper(const BoldDrawing& d) {
  PropernessReport report;
  const auto positions = d.layout().positions();
  const double r = d.params().radius;
  const double w = d.params().width;

  // Condition 1: centers further apart than 2r.
  std::vector<NodeId> order(positions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<NodeId>(i);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return positions[a].x < positions[b].x || (positions[a].x == positions[b].x && a < b);
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Point& a = positions[order[i]];
      const Point& b = positions[order[j]];
      if (b.x - a.x > 2.0 * r) break;
      if (std::hypot(b.x - a.x, b.y - a.y) <= 2.0 * r) {
        report.disk_overlaps.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
      }
    }
  }
  std::sort(report.disk_overlaps.begin(), report.disk_overlaps.end());

  const auto segs = edge_segments(d);

  // Condition 3: collinear overlaps make a pair meet infinitely often.
  for_each_candidate_pair(segs, [&](std::size_t i, std::size_t j, SegmentRelation rel) {
    if (rel == SegmentRelation::kCollinearOverlap) report.collinear_overlaps.emplace_back(i, j);
  });
  std::sort(report.collinear_overlaps.begin(), report.collinear_overlaps.end());

  // Condition 2: two crossings of distinct pairs closer than w. Crossing
  // points are bucketed on a grid with cell size max(w, tiny).
  const auto crossings = list_crossings(segs);
  const double cell = std::max(w, 1e-12);
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
  auto cell_of = [cell](double v) { return static_cast<std::int64_t>(std::floor(v / cell)); };
  auto key = [](std::int64_t cx, std::int64_t cy) { return cx * 73856093LL ^ cy * 19349663LL; };
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    buckets[key(cell_of(crossings[k].point.x), cell_of(crossings[k].point.y))].push_back(k);
  }
  std::set<std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const Crossing& a = crossings[k];
    const auto cx = cell_of(a.point.x), cy = cell_of(a.point.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = buckets.find(key(cx + dx, cy + dy));
        if (it == buckets.end()) continue;
        for (std::size_t other : it->second) {
          if (other <= k) continue;
          const Crossing& b = crossings[other];
          if (std::hypot(a.point.x - b.point.x, a.point.y - b.point.y) > w) continue;
          std::vector<std::size_t> edges{a.first, a.second, b.first, b.second};
          std::sort(edges.begin(), edges.end());
          edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
          groups.insert(std::move(edges));
        }
      }
    }
  }
  report.concurrent_points.assign(groups.begin(), groups.end());

  report.verdict = report.disk_overlaps.empty() && report.concurrent_points.empty() &&
                   report.collinear_overlaps.empty();
  return report;
}

DrawingMetrics measure(const BoldDrawing& d, const AreaMode& mode) {
  DrawingMetrics m;
  auto lengths = edge_lengths(d);
  m.total_edge_length = lengths.total;
  m.edge_lengths = std::move(lengths.lengths);
  m.crossings = count_crossings_sweep(d);
  m.area = bounding_area(d, mode);
  return m;
}

}  // namespace inka
