#pragma once

// Shared fixtures and seeded generators for the test suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "inka/model.h"

namespace inka::testing {

// The three two-edge drawings compared in the ink-vs-crossing example: four
// disks of radius 1 on a 10-unit square, edges of width 0.1.
inline BoldDrawing parallel_edges_drawing(double r = 1.0, double w = 0.1) {
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {2, 3}};
  return BoldDrawing(Graph::build(4, e), Layout({{0, 0}, {0, 10}, {10, 0}, {10, 10}}), {r, w, 1.0});
}

inline BoldDrawing crossing_diagonals_drawing(double r = 1.0, double w = 0.1) {
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {2, 3}};
  return BoldDrawing(Graph::build(4, e), Layout({{0, 0}, {10, 10}, {0, 10}, {10, 0}}), {r, w, 1.0});
}

// Same edge lengths as the parallel drawing, but the two edges cross.
inline BoldDrawing crossing_plus_drawing(double r = 1.0, double w = 0.1) {
  std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {2, 3}};
  return BoldDrawing(Graph::build(4, e), Layout({{0, 5}, {10, 5}, {5, 0}, {5, 10}}), {r, w, 1.0});
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1p-53;
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  const std::size_t max_m = n * (n - 1) / 2;
  if (m > max_m) m = max_m;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<std::pair<NodeId, NodeId>> edges;
  while (edges.size() < m) {
    auto a = static_cast<NodeId>(uniform_index(rng, n));
    auto b = static_cast<NodeId>(uniform_index(rng, n));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) edges.emplace_back(a, b);
  }
  return Graph::build(n, edges);
}

// Integer coordinates in [0, grid] when grid > 0 (lots of degeneracies),
// otherwise continuous in [0, 100).
inline Layout random_layout(std::mt19937_64& rng, std::size_t n, int grid = 0) {
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    if (grid > 0) {
      p = {static_cast<double>(rng() % (grid + 1)), static_cast<double>(rng() % (grid + 1))};
    } else {
      p = {uniform(rng, 0, 100), uniform(rng, 0, 100)};
    }
  }
  return Layout(std::move(pts));
}

inline Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<std::pair<NodeId, NodeId>> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::build(rows * cols, e);
}

inline Layout grid_layout(std::size_t rows, std::size_t cols, double spacing) {
  std::vector<Point> pts;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) pts.push_back({c * spacing, r * spacing});
  }
  return Layout(std::move(pts));
}

inline bool near_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace inka::testing
