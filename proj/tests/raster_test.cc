#include "inka/raster.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "inka/error.h"
#include "inka/geometry.h"
#include "inka/ink.h"
#include "test_support.h"

namespace inka {
namespace {

constexpr double kPi = std::numbers::pi;

// Area of the part of a w-wide strip, running from a disk centre outwards,
// that lies beyond radius r (the corners of a butt cap poking out of a disk).
double cap_sliver(double r, double w) {
  auto F = [r](double y) { return y / 2 * std::sqrt(r * r - y * y) + r * r / 2 * std::asin(y / r); };
  return w * r - (F(w / 2) - F(-w / 2));
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
  return k;
}

BoldDrawing single_disk(double r) {
  return BoldDrawing(Graph::build(1, std::vector<std::pair<NodeId, NodeId>>{}), Layout({{0, 0}}), {r, 0.0, 1.0});
}

BoldDrawing crossing_at(double theta_deg, double r, double w) {
  const double t = theta_deg * kPi / 180.0;
  const double h = 50.0;
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {2, 3}};
  // Rotated off the axes: axis-aligned strips alias coherently.
  const double phi = 0.3;
  auto at = [&](double a, double rad) { return Point{rad * std::cos(a + phi), rad * std::sin(a + phi)}; };
  Layout lay({at(0, -h), at(0, h), at(t, -h), at(t, h)});
  return BoldDrawing(Graph::build(4, e), lay, {r, w, 1.0});
}

TEST(RasterConfig, Validation) {
  RasterConfig c;
  EXPECT_NO_THROW(c.validate());
  c.resolution = 63;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = {};
  c.supersampling = 3;
  EXPECT_THROW(c.validate(), InvalidArgument);
  for (int s : {1, 2, 4}) {
    c.supersampling = s;
    EXPECT_NO_THROW(c.validate());
  }
}

TEST(Raster, UnitDiskWithinOnePercent) {
  const double a = rasterize_ink(single_disk(1.0));
  EXPECT_NEAR(a, kPi, 0.01 * kPi);
}

TEST(Raster, DegenerateBoxThrows) {
  EXPECT_THROW(rasterize_ink(single_disk(0.0)), InvalidArgument);
  BoldDrawing same(Graph::build(2, std::vector<std::pair<NodeId, NodeId>>{{0, 1}}), Layout({{3, 3}, {3, 3}}), {0.0, 1.0, 1.0});
  EXPECT_THROW(rasterize_ink(same), InvalidArgument);
  BoldDrawing empty(Graph::build(0, std::vector<std::pair<NodeId, NodeId>>{}), Layout(std::vector<Point>{}), {1.0, 1.0, 1.0});
  EXPECT_THROW(rasterize_ink(empty), InvalidArgument);
}

TEST(Raster, ThinLineHasNoArea) {
  BoldDrawing d(Graph::build(2, std::vector<std::pair<NodeId, NodeId>>{{0, 1}}), Layout({{0, 0}, {10, 0}}), {0.0, 0.0, 1.0});
  EXPECT_EQ(rasterize_ink(d), 0.0);
}

TEST(Raster, AxisAlignedRectangle) {
  BoldDrawing d(Graph::build(2, std::vector<std::pair<NodeId, NodeId>>{{0, 1}}), Layout({{0, 0}, {10, 0}}), {0.0, 2.0, 1.0});
  EXPECT_NEAR(rasterize_ink(d), 20.0, 0.2);
}

TEST(Raster, ParallelEdgesMatchFormula) {
  const BoldDrawing d = testing::parallel_edges_drawing();
  const double formula = ink_total(d, measure(d)).ink_total;
  const double raster = rasterize_ink(d);
  EXPECT_NEAR(raster, formula, 0.02 * formula);
  // The exact union adds the four cap slivers.
  EXPECT_NEAR(raster, formula + 4 * cap_sliver(1.0, 0.1), 0.005 * formula);
}

TEST(Raster, CrossingGapMatchesRhombus) {
  for (double theta : {30.0, 45.0, 60.0, 90.0}) {
    const double r = 5.0, w = 1.0;
    const BoldDrawing d = crossing_at(theta, r, w);
    ASSERT_EQ(count_crossings_sweep(d), 1);
    const double formula = ink_total(d, measure(d)).ink_total;
    const double raster = rasterize_ink(d, {4096, 2});
    const double s = std::sin(theta * kPi / 180.0);
    const double gap = w * w - w * w / s;  // formula removes w^2, the union loses w^2 / sin
    const double expected = formula + gap + 4 * cap_sliver(r, w);
    EXPECT_NEAR(raster, expected, 0.05) << theta;
    if (theta < 90.0) {
      EXPECT_LT(raster, formula) << theta;
    }
  }
}

TEST(Raster, ResolutionConvergence) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = testing::random_graph(rng, 12, 20);
    const Layout lay = testing::random_layout(rng, 12);
    const BoldDrawing d(g, lay, {2.0, 0.8, 1.0});
    const double a1 = rasterize_ink(d, {1024, 2});
    const double a2 = rasterize_ink(d, {2048, 2});
    EXPECT_LT(std::abs(a1 - a2), 0.005 * a2) << trial;
  }
}

TEST(Raster, SupersamplingEqualsHigherResolution) {
  const BoldDrawing d = testing::crossing_diagonals_drawing();
  EXPECT_EQ(rasterize(d, {512, 4}).samples, rasterize(d, {2048, 1}).samples);
}

TEST(Raster, UnionNeverExceedsSumOfParts) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_graph(rng, 10, 15);
    const Layout lay = testing::random_layout(rng, 10);
    const BoldDrawing d(g, lay, {1.5, 0.5, 1.0});
    const EdgeLengths el = edge_lengths(d);
    double parts = 10 * kPi * 1.5 * 1.5;
    for (double l : el.lengths) parts += 0.5 * l;
    EXPECT_LE(rasterize_ink(d, {1024, 2}), parts * 1.002) << trial;
  }
}

TEST(Svg, ElementCountsAndAttributes) {
  const BoldDrawing d = testing::crossing_diagonals_drawing(1.0, 0.25);
  const std::string svg = render_svg(d);
  EXPECT_EQ(count(svg, "<line "), 2u);
  EXPECT_EQ(count(svg, "<circle "), 4u);
  EXPECT_NE(svg.find("stroke-linecap=\"butt\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"0.250000\""), std::string::npos);
  EXPECT_NE(svg.find("r=\"1.000000\""), std::string::npos);
  EXPECT_LT(svg.find("<line "), svg.find("<circle "));
}

TEST(Svg, Deterministic) {
  std::mt19937_64 rng(3);
  const Graph g = testing::random_graph(rng, 30, 60);
  const BoldDrawing d(g, testing::random_layout(rng, 30), {1.0, 0.3, 1.0});
  EXPECT_EQ(render_svg(d), render_svg(d));
}

TEST(Svg, YAxisPointsUp) {
  BoldDrawing d(Graph::build(2, std::vector<std::pair<NodeId, NodeId>>{}), Layout({{0, 0}, {0, 10}}), {1.0, 0.0, 1.0});
  const std::string svg = render_svg(d);
  // Node 0 is lower in the drawing, so larger SVG y.
  EXPECT_NE(svg.find("<circle cx=\"1.000000\" cy=\"11.000000\""), std::string::npos);
  EXPECT_NE(svg.find("<circle cx=\"1.000000\" cy=\"1.000000\""), std::string::npos);
}

}  // namespace
}  // namespace inka
