#pragma once

// Synthetic graphs for benchmarks and tests.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "inka/model.h"

namespace inka {

Graph grid_graph(std::size_t rows, std::size_t cols);

// Grid plus the down-right diagonal of every cell.
Graph triangulated_grid(std::size_t rows, std::size_t cols);

Graph grid3d_graph(std::size_t a, std::size_t b, std::size_t c);

// Preferential attachment: a clique on m+1 nodes, then every new node links to
// m distinct earlier nodes chosen with probability proportional to degree.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

// "grid:RxC", "trigrid:RxC", "grid3d:AxBxC" or "ba:N:M[:SEED]".
// Throws InvalidArgument for anything else.
Graph generate_graph(std::string_view spec);

}  // namespace inka
