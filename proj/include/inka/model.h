#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace inka {

using NodeId = std::uint32_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Normalizes every pair to (min, max) and drops repeated pairs, keeping the
  // first occurrence. Throws GraphError on self-loops and out-of-range ids.
  static Graph build(std::size_t node_count,
                     std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::vector<std::pair<NodeId, NodeId>> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
};

Graph build_graph(std::size_t node_count,
                  std::span<const std::pair<NodeId, NodeId>> edges);

// m / n. Throws InvalidArgument when n == 0.
double graph_density(const Graph& g);

// Node positions in drawing units, indexed by node id.
class Layout {
 public:
  Layout() = default;
  // Throws InvalidArgument on non-finite coordinates.
  explicit Layout(std::vector<Point> positions);

  std::size_t size() const { return positions_.size(); }
  const Point& operator[](std::size_t i) const { return positions_[i]; }
  std::span<const Point> positions() const { return positions_; }

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<Point> positions_;
};

struct RenderParams {
  double radius = 0.0;
  double width = 0.0;
  double gamma = 1.0;

  // Throws InvalidArgument unless r >= 0, w >= 0 and 0 < gamma <= 1.
  void validate() const;
};

// A graph, its layout and the disk/rectangle sizes used to draw it.
class BoldDrawing {
 public:
  BoldDrawing(Graph graph, Layout layout, RenderParams params);

  const Graph& graph() const { return graph_; }
  const Layout& layout() const { return layout_; }
  const RenderParams& params() const { return params_; }

 private:
  Graph graph_;
  Layout layout_;
  RenderParams params_;
};

struct DrawingMetrics {
  double total_edge_length = 0.0;  // L
  std::int64_t crossings = 0;      // cr(D)
  double area = 0.0;               // A
  std::vector<double> edge_lengths;
};

struct InkReport {
  double ink_nodes = 0.0;
  double ink_edges = 0.0;
  double overlap = 0.0;
  double ink_total = 0.0;
  double density = 0.0;
  bool feasible = false;
};

}  // namespace inka
