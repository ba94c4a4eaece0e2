#include "inka/generators.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <string>
#include <vector>

#include "inka/error.h"

namespace inka {
namespace {

using Pairs = std::vector<std::pair<NodeId, NodeId>>;

NodeId id(std::size_t v) { return static_cast<NodeId>(v); }

std::vector<std::size_t> numbers(std::string_view s, char sep) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    const std::string_view part = s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size() || part.empty()) {
      throw InvalidArgument("bad number '" + std::string(part) + "' in generator spec");
    }
    out.push_back(v);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Graph grid_graph(std::size_t rows, std::size_t cols) {
  Pairs e;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r * cols + c), id(r * cols + c + 1));
      if (r + 1 < rows) e.emplace_back(id(r * cols + c), id((r + 1) * cols + c));
    }
  }
  return Graph::build(rows * cols, e);
}

Graph triangulated_grid(std::size_t rows, std::size_t cols) {
  Pairs e = grid_graph(rows, cols).edge_list();
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) e.emplace_back(id(r * cols + c), id((r + 1) * cols + c + 1));
  }
  return Graph::build(rows * cols, e);
}

Graph grid3d_graph(std::size_t a, std::size_t b, std::size_t c) {
  Pairs e;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return id((i * b + j) * c + k); };
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      for (std::size_t k = 0; k < c; ++k) {
        if (i + 1 < a) e.emplace_back(at(i, j, k), at(i + 1, j, k));
        if (j + 1 < b) e.emplace_back(at(i, j, k), at(i, j + 1, k));
        if (k + 1 < c) e.emplace_back(at(i, j, k), at(i, j, k + 1));
      }
    }
  }
  return Graph::build(a * b * c, e);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw InvalidArgument("attachment count must be positive");
  Pairs e;
  std::vector<NodeId> ends;  // every node once per incident edge
  const std::size_t core = std::min(n, m + 1);
  for (std::size_t u = 0; u < core; ++u) {
    for (std::size_t v = u + 1; v < core; ++v) {
      e.emplace_back(id(u), id(v));
      ends.push_back(id(u));
      ends.push_back(id(v));
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeId> picked;
  for (std::size_t v = core; v < n; ++v) {
    picked.clear();
    while (picked.size() < m) {
      const NodeId t = ends[rng() % ends.size()];
      if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
    }
    for (NodeId t : picked) {
      e.emplace_back(t, id(v));
      ends.push_back(t);
      ends.push_back(id(v));
    }
  }
  return Graph::build(n, e);
}

Graph generate_graph(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("generator spec needs 'kind:params'");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (kind == "grid" || kind == "trigrid") {
    const auto v = numbers(rest, 'x');
    if (v.size() != 2) throw InvalidArgument("expected RxC in '" + std::string(spec) + "'");
    return kind == "grid" ? grid_graph(v[0], v[1]) : triangulated_grid(v[0], v[1]);
  }
  if (kind == "grid3d") {
    const auto v = numbers(rest, 'x');
    if (v.size() != 3) throw InvalidArgument("expected AxBxC in '" + std::string(spec) + "'");
    return grid3d_graph(v[0], v[1], v[2]);
  }
  if (kind == "ba") {
    const auto v = numbers(rest, ':');
    if (v.size() != 2 && v.size() != 3) throw InvalidArgument("expected N:M[:SEED] in '" + std::string(spec) + "'");
    return barabasi_albert(v[0], v[1], v.size() == 3 ? v[2] : 1);
  }
  throw InvalidArgument("unknown generator '" + std::string(kind) + "'");
}

}  // namespace inka
