#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inka/model.h"

namespace inka {

struct Segment {
  Point p;
  Point q;

  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class SegmentRelation {
  kDisjoint,
  kProperCrossing,    // open segments cross transversally at one point
  kTouching,          // meet at an endpoint (shared vertex or T-junction)
  kCollinearOverlap,  // collinear and sharing more than one point
};

// Orientation-based classification. The orientation sign is exact for
// double inputs, so the result never depends on rounding.
SegmentRelation classify_segments(const Segment& s1, const Segment& s2);

// The crossing point when the open segments cross transversally, otherwise
// none. Shared endpoints and collinear overlaps both yield none.
std::optional<Point> segments_intersect(const Segment& s1, const Segment& s2);

// One straight segment per edge, in edge order.
std::vector<Segment> edge_segments(const Graph& g, const Layout& layout);
std::vector<Segment> edge_segments(const BoldDrawing& d);

struct CrossingCount {
  std::int64_t crossings = 0;
  // Collinear overlapping pairs; each one breaks properness condition 3.
  std::int64_t collinear_overlaps = 0;
};

// O(m^2) pairwise oracle.
CrossingCount count_crossings_bruteforce(std::span<const Segment> segments);
CrossingCount count_crossings_bruteforce(const BoldDrawing& d);

// Bentley-Ottmann plane sweep over exact event points. Counts the same pairs
// as the brute-force oracle.
std::int64_t count_crossings_sweep(std::span<const Segment> segments);
std::int64_t count_crossings_sweep(const BoldDrawing& d);

struct Crossing {
  std::size_t first = 0;   // segment indices, first < second
  std::size_t second = 0;
  Point point;
  double sin_angle = 0.0;  // sine of the crossing angle, in (0, 1]
};

// Every proper crossing, found by pairwise testing.
std::vector<Crossing> list_crossings(std::span<const Segment> segments);

struct EdgeLengths {
  std::vector<double> lengths;
  double total = 0.0;
};

EdgeLengths edge_lengths(const BoldDrawing& d);

struct BoundingBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  double area() const { return width() * height(); }
};

// Box around every disk (inflated by r) and every edge rectangle (inflated
// by w/2). Empty graphs give a zero box.
BoundingBox drawing_bounds(const BoldDrawing& d);

// How the drawing area A is obtained.
struct AreaMode {
  std::optional<double> fixed;  // none = derive from the drawing

  static AreaMode automatic() { return {}; }
  static AreaMode fixed_value(double a) { return {a}; }
  // "auto" or a non-negative number.
  static AreaMode parse(const std::string& text);
};

double bounding_area(const BoldDrawing& d, const AreaMode& mode = AreaMode::automatic());

struct PropernessReport {
  std::vector<std::pair<NodeId, NodeId>> disk_overlaps;
  // Each entry lists the edges involved in two crossings closer than w.
  std::vector<std::vector<std::size_t>> concurrent_points;
  std::vector<std::pair<std::size_t, std::size_t>> collinear_overlaps;
  bool verdict = true;
};

PropernessReport check_proper(const BoldDrawing& d);

// L, per-edge lengths, cr (sweep) and A in one pass.
DrawingMetrics measure(const BoldDrawing& d, const AreaMode& mode = AreaMode::automatic());

}  // namespace inka
