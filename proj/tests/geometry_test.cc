#include "inka/geometry.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "inka/error.h"
#include "test_support.h"

namespace inka {
namespace {

using testing::crossing_diagonals_drawing;
using testing::crossing_plus_drawing;
using testing::parallel_edges_drawing;

TEST(SegmentsIntersect, SymmetricDiagonalsCrossAtCenter) {
  auto p = segments_intersect({{0, 0}, {10, 10}}, {{0, 10}, {10, 0}});
  ASSERT_TRUE(p.has_value());
  EXPECT_DOUBLE_EQ(p->x, 5.0);
  EXPECT_DOUBLE_EQ(p->y, 5.0);
}

TEST(SegmentsIntersect, ParallelEdgesDoNotCross) {
  EXPECT_FALSE(segments_intersect({{0, 0}, {0, 10}}, {{10, 0}, {10, 10}}).has_value());
}

TEST(SegmentsIntersect, SharedEndpointIsNotACrossing) {
  EXPECT_FALSE(segments_intersect({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}).has_value());
  EXPECT_EQ(classify_segments({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}), SegmentRelation::kTouching);
}

TEST(SegmentsIntersect, CollinearOverlapIsFlaggedSeparately) {
  const Segment a{{0, 0}, {4, 0}}, b{{2, 0}, {6, 0}};
  EXPECT_FALSE(segments_intersect(a, b).has_value());
  EXPECT_EQ(classify_segments(a, b), SegmentRelation::kCollinearOverlap);
  // Collinear but only touching at one point.
  EXPECT_EQ(classify_segments({{0, 0}, {2, 0}}, {{2, 0}, {5, 0}}), SegmentRelation::kTouching);
  EXPECT_EQ(classify_segments({{0, 0}, {1, 0}}, {{2, 0}, {5, 0}}), SegmentRelation::kDisjoint);
}

TEST(SegmentsIntersect, TJunctionTouches) {
  EXPECT_EQ(classify_segments({{0, 0}, {10, 0}}, {{5, 0}, {5, 5}}), SegmentRelation::kTouching);
}

TEST(CrossingCount, FigureDrawings) {
  EXPECT_EQ(count_crossings_bruteforce(parallel_edges_drawing()).crossings, 0);
  EXPECT_EQ(count_crossings_bruteforce(crossing_diagonals_drawing()).crossings, 1);
  EXPECT_EQ(count_crossings_bruteforce(crossing_plus_drawing()).crossings, 1);
  EXPECT_EQ(count_crossings_sweep(parallel_edges_drawing()), 0);
  EXPECT_EQ(count_crossings_sweep(crossing_diagonals_drawing()), 1);
  EXPECT_EQ(count_crossings_sweep(crossing_plus_drawing()), 1);
}

TEST(CrossingCount, ConvexK4HasOneCrossing) {
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  BoldDrawing d(Graph::build(4, e), Layout({{0, 0}, {4, 0}, {4, 3}, {0, 3}}), {});
  // Oracle: the 15 pairs enumerated by hand; only the diagonals (0,2) x (1,3) cross.
  int expected = 0;
  const auto segs = edge_segments(d);
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      expected += segments_intersect(segs[i], segs[j]).has_value();
  EXPECT_EQ(expected, 1);
  EXPECT_EQ(count_crossings_bruteforce(d).crossings, 1);
  EXPECT_EQ(count_crossings_sweep(d), 1);
}

TEST(CrossingCount, GridOnItsGridIsCrossingFree) {
  BoldDrawing d(testing::grid_graph(12, 9), testing::grid_layout(12, 9, 3.0), {});
  EXPECT_EQ(count_crossings_sweep(d), 0);
  EXPECT_EQ(count_crossings_bruteforce(d).crossings, 0);
}

TEST(CrossingCount, ConcurrentLinesThroughOnePoint) {
  // Five segments through (0, 0), none ending there: 10 crossings.
  std::vector<Segment> segs;
  for (int k = 0; k < 5; ++k) {
    const double a = k * std::numbers::pi / 5 + 0.1;
    segs.push_back({{-std::cos(a) * 4, -std::sin(a) * 4}, {std::cos(a) * 3, std::sin(a) * 3}});
  }
  segs.push_back({{0, -5}, {0, 5}});  // a vertical one as well
  EXPECT_EQ(count_crossings_bruteforce(segs).crossings, 15);
  EXPECT_EQ(count_crossings_sweep(segs), 15);
}

TEST(CrossingCount, DegenerateMixture) {
  std::vector<Segment> segs{
      {{0, 0}, {10, 0}},   // horizontal
      {{5, -5}, {5, 5}},   // vertical through its interior
      {{5, 0}, {8, 4}},    // starts on both of the above
      {{2, 0}, {7, 0}},    // collinear overlap with the first
      {{0, 3}, {10, -3}},  // crosses through (5, 0)
      {{5, 5}, {5, 9}},    // vertical continuing the other vertical
      {{3, 3}, {3, 3}},    // zero length
  };
  const auto brute = count_crossings_bruteforce(segs);
  EXPECT_EQ(count_crossings_sweep(segs), brute.crossings);
  EXPECT_EQ(brute.collinear_overlaps, 1);
}

struct RandomCase {
  int seed;
  int grid;
};

class SweepMatchesBruteForce : public ::testing::TestWithParam<int> {};

TEST_P(SweepMatchesBruteForce, OnRandomDrawings) {
  const int grid = GetParam();
  std::mt19937_64 rng(1000 + grid);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + testing::uniform_index(rng, 60);
    const std::size_t m = testing::uniform_index(rng, 120);
    const Graph g = testing::random_graph(rng, n, m);
    const Layout layout = testing::random_layout(rng, n, grid);
    const auto segs = edge_segments(g, layout);
    ASSERT_EQ(count_crossings_sweep(segs), count_crossings_bruteforce(segs).crossings)
        << "trial " << trial << " grid " << grid;
  }
}

// grid 0 = continuous coordinates; small grids force collinear and
// concurrent configurations.
INSTANTIATE_TEST_SUITE_P(Grids, SweepMatchesBruteForce, ::testing::Values(0, 3, 6, 20));

TEST(CrossingCount, InvariantUnderScalingAndRigidMotion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 30, 60);
    const Layout base = testing::random_layout(rng, 30);
    const auto cr = count_crossings_sweep(edge_segments(g, base));
    const double angle = testing::uniform(rng, 0, 6.28), s = testing::uniform(rng, 0.1, 10);
    std::vector<Point> moved;
    for (const Point& p : base.positions()) {
      moved.push_back({s * (std::cos(angle) * p.x - std::sin(angle) * p.y) + 17.0,
                       s * (std::sin(angle) * p.x + std::cos(angle) * p.y) - 3.0});
    }
    EXPECT_EQ(count_crossings_sweep(edge_segments(g, Layout(moved))), cr);
  }
}

TEST(EdgeLengths, FigureDrawings) {
  EXPECT_DOUBLE_EQ(edge_lengths(parallel_edges_drawing()).total, 20.0);
  EXPECT_NEAR(edge_lengths(crossing_diagonals_drawing()).total, 20.0 * std::sqrt(2.0), 1e-12);
  BoldDrawing empty(Graph::build(3, {}), Layout({{0, 0}, {1, 1}, {2, 2}}), {});
  EXPECT_EQ(edge_lengths(empty).total, 0.0);
}

TEST(EdgeLengths, ScaleLinearly) {
  std::mt19937_64 rng(3);
  const Graph g = testing::random_graph(rng, 20, 40);
  const Layout base = testing::random_layout(rng, 20);
  std::vector<Point> scaled;
  for (const Point& p : base.positions()) scaled.push_back({p.x * 3.5, p.y * 3.5});
  const double l0 = edge_lengths(BoldDrawing(g, base, {})).total;
  const double l1 = edge_lengths(BoldDrawing(g, Layout(scaled), {})).total;
  EXPECT_TRUE(testing::near_rel(l1, 3.5 * l0, 1e-9));
}

TEST(BoundingArea, SingleDisk) {
  BoldDrawing d(Graph::build(1, {}), Layout({{0, 0}}), {1.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(bounding_area(d), 4.0);
}

TEST(BoundingArea, ParallelEdgesDrawing) {
  EXPECT_DOUBLE_EQ(bounding_area(parallel_edges_drawing()), 144.0);
}

TEST(BoundingArea, FixedOverride) {
  EXPECT_DOUBLE_EQ(bounding_area(parallel_edges_drawing(), AreaMode::fixed_value(100)), 100.0);
  EXPECT_DOUBLE_EQ(*AreaMode::parse("100").fixed, 100.0);
  EXPECT_FALSE(AreaMode::parse("auto").fixed.has_value());
  EXPECT_THROW(AreaMode::parse("-3"), InvalidArgument);
  EXPECT_THROW(AreaMode::parse("12x"), InvalidArgument);
}

TEST(BoundingArea, EmptyGraphHasZeroArea) {
  BoldDrawing d(Graph::build(0, {}), Layout(), {1.0, 1.0, 1.0});
  EXPECT_EQ(bounding_area(d), 0.0);
}

TEST(BoundingArea, WideEdgesStickOutOfSmallDisks) {
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}};
  BoldDrawing d(Graph::build(2, e), Layout({{0, 0}, {10, 0}}), {0.0, 2.0, 1.0});
  EXPECT_DOUBLE_EQ(bounding_area(d), 20.0);
}

TEST(BoundingArea, ScalesQuadraticallyWithoutInflation) {
  std::mt19937_64 rng(11);
  const Graph g = testing::random_graph(rng, 25, 30);
  const Layout base = testing::random_layout(rng, 25);
  std::vector<Point> scaled;
  for (const Point& p : base.positions()) scaled.push_back({p.x * 2.5, p.y * 2.5});
  const double a0 = bounding_area(BoldDrawing(g, base, {}));
  const double a1 = bounding_area(BoldDrawing(g, Layout(scaled), {}));
  EXPECT_TRUE(testing::near_rel(a1, 6.25 * a0, 1e-9));
}

TEST(CheckProper, ParallelEdgesDrawingIsProper) {
  const auto report = check_proper(parallel_edges_drawing());
  EXPECT_TRUE(report.verdict);
  EXPECT_TRUE(report.disk_overlaps.empty());
  EXPECT_TRUE(report.concurrent_points.empty());
}

TEST(CheckProper, CloseDisksOverlap) {
  BoldDrawing d(Graph::build(2, {}), Layout({{0, 0}, {1, 0}}), {1.0, 0.0, 1.0});
  const auto report = check_proper(d);
  EXPECT_FALSE(report.verdict);
  ASSERT_EQ(report.disk_overlaps.size(), 1u);
  EXPECT_EQ(report.disk_overlaps[0], (std::pair<NodeId, NodeId>{0, 1}));
}

TEST(CheckProper, ThreeConcurrentDiagonals) {
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {2, 3}, {4, 5}};
  BoldDrawing d(Graph::build(6, e),
                Layout({{0, 0}, {10, 10}, {0, 10}, {10, 0}, {0, 5}, {10, 5}}), {0.5, 0.1, 1.0});
  const auto report = check_proper(d);
  EXPECT_FALSE(report.verdict);
  ASSERT_EQ(report.concurrent_points.size(), 1u);
  EXPECT_EQ(report.concurrent_points[0], (std::vector<std::size_t>{0, 1, 2}));
}

TEST(CheckProper, CollinearOverlapBreaksCondition3) {
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {2, 3}};
  BoldDrawing d(Graph::build(4, e), Layout({{0, 0}, {10, 0}, {5, 0}, {15, 0}}), {1.0, 0.1, 1.0});
  const auto report = check_proper(d);
  EXPECT_FALSE(report.verdict);
  EXPECT_EQ(report.collinear_overlaps.size(), 1u);
}

TEST(CheckProper, AdjacentEdgesAtVertexAreNotConcurrent) {
  // Star: many edges share the center; vertex incidence is not a violation.
  std::vector<std::pair<NodeId, NodeId>> e;
  std::vector<Point> pts{{0, 0}};
  for (NodeId k = 1; k <= 8; ++k) {
    e.emplace_back(0, k);
    pts.push_back({10 * std::cos(k * 0.7), 10 * std::sin(k * 0.7)});
  }
  BoldDrawing d(Graph::build(9, e), Layout(pts), {0.5, 0.5, 1.0});
  EXPECT_TRUE(check_proper(d).verdict);
}

TEST(Measure, CollectsAllQuantities) {
  const auto m = measure(crossing_diagonals_drawing(), AreaMode::fixed_value(100));
  EXPECT_EQ(m.crossings, 1);
  EXPECT_EQ(m.edge_lengths.size(), 2u);
  EXPECT_NEAR(m.total_edge_length, 20 * std::sqrt(2.0), 1e-12);
  EXPECT_EQ(m.area, 100.0);
}

}  // namespace
}  // namespace inka
