#include "inka/model.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "inka/error.h"

namespace inka {

Graph Graph::build(std::size_t node_count,
                   std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g;
  g.node_count_ = node_count;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a >= node_count || b >= node_count) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(a) +
                           ", " + std::to_string(b) + ") has an endpoint outside [0, " +
                           std::to_string(node_count) + ")",
                       i);
    }
    if (a == b) {
      throw GraphError("edge " + std::to_string(i) + " is a self-loop on node " +
                           std::to_string(a),
                       i);
    }
    const Edge e{std::min(a, b), std::max(a, b)};
    const std::uint64_t key = (std::uint64_t{e.u} << 32) | e.v;
    if (seen.insert(key).second) g.edges_.push_back(e);
  }
  return g;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

Graph build_graph(std::size_t node_count,
                  std::span<const std::pair<NodeId, NodeId>> edges) {
  return Graph::build(node_count, edges);
}

double graph_density(const Graph& g) {
  if (g.node_count() == 0) throw InvalidArgument("graph density undefined for an empty node set");
  return static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

Layout::Layout(std::vector<Point> positions) : positions_(std::move(positions)) {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!std::isfinite(positions_[i].x) || !std::isfinite(positions_[i].y)) {
      throw InvalidArgument("node " + std::to_string(i) + " has a non-finite position");
    }
  }
}

void RenderParams::validate() const {
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw InvalidArgument("radius must be finite and >= 0");
  if (!(width >= 0.0) || !std::isfinite(width)) throw InvalidArgument("width must be finite and >= 0");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in (0, 1]");
}

BoldDrawing::BoldDrawing(Graph graph, Layout layout, RenderParams params)
    : graph_(std::move(graph)), layout_(std::move(layout)), params_(params) {
  params_.validate();
  if (layout_.size() != graph_.node_count()) {
    throw InvalidArgument("layout has " + std::to_string(layout_.size()) +
                          " positions but the graph has " +
                          std::to_string(graph_.node_count()) + " nodes");
  }
}

}  // namespace inka
