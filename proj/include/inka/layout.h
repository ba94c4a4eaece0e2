#pragma once

// Deterministic 2-D layouts: random, circular, spring embedder and a
// matching-based multilevel spring embedder.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inka/model.h"

namespace inka {

enum class LayoutAlgorithm { kRandom, kCircular, kForceDirected, kMultilevel };

std::string_view algorithm_name(LayoutAlgorithm a);
std::optional<LayoutAlgorithm> parse_algorithm(std::string_view name);
// "random, circular, force-directed, multilevel"
std::string supported_algorithms();

struct LayoutConfig {
  LayoutAlgorithm algorithm = LayoutAlgorithm::kForceDirected;
  std::uint64_t seed = 1;
  int iterations = 500;
  double ideal_edge_length = 30.0;
  double cooling = 0.95;
  // Above this many nodes in a component, repulsion only acts between
  // nodes in neighbouring grid cells.
  std::size_t exact_repulsion_limit = 2000;
  std::size_t coarsest_size = 50;

  void validate() const;  // throws InvalidArgument
};

// Uniform in [0, sqrt(n) * ideal_edge_length]^2.
Layout layout_random(const Graph& g, const LayoutConfig& config);
Layout layout_random(const Graph& g, std::uint64_t seed);

// Nodes in id order on a circle with neighbouring nodes ideal_edge_length apart.
Layout layout_circular(const Graph& g, const LayoutConfig& config);

// Fruchterman-Reingold forces (attraction d^2/k, repulsion k^2/d) with a
// geometric cooling schedule. Components are laid out separately and packed
// in rows with ideal_edge_length of padding. Throws LayoutError if a position
// stops being finite.
Layout layout_force_directed(const Graph& g, const LayoutConfig& config);

struct MultilevelLevel {
  std::size_t fine_nodes = 0;
  std::size_t coarse_nodes = 0;
  // Coarse edge length measured in the coarse layout, and between the child
  // centroids after refining the finer level.
  double coarse_length_before = 0.0;
  double coarse_length_after = 0.0;
  bool rescaled = false;  // refinement grew it by more than 5% and was shrunk back
};

struct MultilevelTrace {
  std::vector<MultilevelLevel> levels;  // one entry per refinement step, all components
};

// Heavy-edge matching down to coarsest_size nodes per component, spring
// embedder on the coarsest graph, then projection and refinement level by
// level. Components of at most coarsest_size nodes get exactly the
// layout_force_directed result.
Layout layout_multilevel(const Graph& g, const LayoutConfig& config,
                         MultilevelTrace* trace = nullptr);

// Dispatch on config.algorithm.
Layout compute_layout(const Graph& g, const LayoutConfig& config);

}  // namespace inka
