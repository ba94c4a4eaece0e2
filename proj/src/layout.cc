#include "inka/layout.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <unordered_map>

#include "inka/error.h"

namespace inka {
namespace {

using Adjacency = std::vector<std::vector<int>>;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Component {
  std::vector<NodeId> nodes;  // ascending
  Adjacency adj;              // local indices
};

std::vector<Component> components(const Graph& g) {
  const std::size_t n = g.node_count();
  Adjacency adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(static_cast<int>(e.v));
    adj[e.v].push_back(static_cast<int>(e.u));
  }
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  std::vector<int> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    Component c;
    comp[s] = id;
    stack.assign(1, static_cast<int>(s));
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      c.nodes.push_back(static_cast<NodeId>(v));
      for (int u : adj[v]) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    std::unordered_map<NodeId, int> local;
    for (std::size_t i = 0; i < c.nodes.size(); ++i) local[c.nodes[i]] = static_cast<int>(i);
    c.adj.resize(c.nodes.size());
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
      for (int u : adj[c.nodes[i]]) c.adj[i].push_back(local[static_cast<NodeId>(u)]);
      std::sort(c.adj[i].begin(), c.adj[i].end());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point> random_square(std::size_t n, double k, std::mt19937_64& rng) {
  const double side = std::sqrt(static_cast<double>(n)) * k;
  std::vector<Point> pos(n);
  for (Point& p : pos) {
    p.x = unit(rng) * side;
    p.y = unit(rng) * side;
  }
  return pos;
}

struct SpringRun {
  double k = 30.0;
  double t0 = 1.0;
  int iterations = 500;
  double cooling = 0.95;
  std::size_t exact_limit = 2000;
};

void repel(const Point& a, const Point& b, double k2, std::mt19937_64& rng, double& fx, double& fy) {
  double dx = a.x - b.x, dy = a.y - b.y;
  double d2 = dx * dx + dy * dy;
  if (d2 < 1e-18 * k2) {
    const double ang = 2 * std::numbers::pi * unit(rng);
    dx = std::cos(ang) * 1e-6 * std::sqrt(k2);
    dy = std::sin(ang) * 1e-6 * std::sqrt(k2);
    d2 = dx * dx + dy * dy;
  }
  // k^2/d along the unit vector: k^2 * (dx, dy) / d^2
  fx += k2 * dx / d2;
  fy += k2 * dy / d2;
}

// Runs the spring embedder in place.
void spring_embed(const Adjacency& adj, std::vector<Point>& pos, const SpringRun& run,
                  std::mt19937_64& rng) {
  const std::size_t n = pos.size();
  if (n < 2) return;
  const double k = run.k, k2 = k * k;
  std::vector<double> fx(n), fy(n);
  double t = run.t0;
  const bool grid = n > run.exact_limit;
  const double cell = 2 * k;
  std::unordered_map<std::int64_t, std::vector<int>> buckets;
  auto key = [](std::int64_t cx, std::int64_t cy) { return (cx << 32) ^ (cy & 0xffffffffLL); };

  for (int it = 0; it < run.iterations; ++it) {
    std::fill(fx.begin(), fx.end(), 0.0);
    std::fill(fy.begin(), fy.end(), 0.0);
    if (!grid) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          double gx = 0, gy = 0;
          repel(pos[i], pos[j], k2, rng, gx, gy);
          fx[i] += gx;
          fy[i] += gy;
          fx[j] -= gx;
          fy[j] -= gy;
        }
      }
    } else {
      buckets.clear();
      for (std::size_t i = 0; i < n; ++i) {
        const auto cx = static_cast<std::int64_t>(std::floor(pos[i].x / cell));
        const auto cy = static_cast<std::int64_t>(std::floor(pos[i].y / cell));
        buckets[key(cx, cy)].push_back(static_cast<int>(i));
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto cx = static_cast<std::int64_t>(std::floor(pos[i].x / cell));
        const auto cy = static_cast<std::int64_t>(std::floor(pos[i].y / cell));
        for (std::int64_t ox = -1; ox <= 1; ++ox) {
          for (std::int64_t oy = -1; oy <= 1; ++oy) {
            const auto b = buckets.find(key(cx + ox, cy + oy));
            if (b == buckets.end()) continue;
            for (int j : b->second) {
              if (static_cast<std::size_t>(j) == i) continue;
              const double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
              if (dx * dx + dy * dy > cell * cell) continue;
              repel(pos[i], pos[j], k2, rng, fx[i], fy[i]);
            }
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (int j : adj[i]) {
        if (static_cast<std::size_t>(j) < i) continue;
        const double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        const double d = std::sqrt(dx * dx + dy * dy);
        // d^2/k along the unit vector: d * (dx, dy) / k
        const double gx = d * dx / k, gy = d * dy / k;
        fx[i] -= gx;
        fy[i] -= gy;
        fx[j] += gx;
        fy[j] += gy;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double f = std::sqrt(fx[i] * fx[i] + fy[i] * fy[i]);
      if (!std::isfinite(f)) throw LayoutError("force became non-finite at iteration " + std::to_string(it), it);
      if (f > 0) {
        const double step = std::min(f, t) / f;
        pos[i].x += fx[i] * step;
        pos[i].y += fy[i] * step;
      }
      if (!std::isfinite(pos[i].x) || !std::isfinite(pos[i].y)) {
        throw LayoutError("position became non-finite at iteration " + std::to_string(it), it);
      }
    }
    t *= run.cooling;
    if (t < 1e-4 * k) break;
  }
}

SpringRun base_run(const LayoutConfig& c, std::size_t n) {
  SpringRun run;
  run.k = c.ideal_edge_length;
  run.t0 = 0.1 * std::sqrt(static_cast<double>(n)) * c.ideal_edge_length;
  run.iterations = c.iterations;
  run.cooling = c.cooling;
  run.exact_limit = c.exact_repulsion_limit;
  return run;
}

std::vector<Point> force_directed_component(const Adjacency& adj, const LayoutConfig& c,
                                            std::mt19937_64& rng) {
  std::vector<Point> pos = random_square(adj.size(), c.ideal_edge_length, rng);
  spring_embed(adj, pos, base_run(c, adj.size()), rng);
  return pos;
}

double total_length(const Adjacency& adj, const std::vector<Point>& pos) {
  double sum = 0.0;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (int j : adj[i]) {
      if (static_cast<std::size_t>(j) > i) sum += std::hypot(pos[i].x - pos[j].x, pos[i].y - pos[j].y);
    }
  }
  return sum;
}

struct Coarsening {
  Adjacency adj;              // coarse graph
  std::vector<int> parent;    // fine node -> coarse node
  std::vector<std::vector<int>> weight;  // parallel to adj
};

Coarsening coarsen(const Adjacency& adj, const std::vector<std::vector<int>>& weight,
                   std::mt19937_64& rng) {
  const std::size_t n = adj.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Coarsening out;
  out.parent.assign(n, -1);
  int next = 0;
  for (int v : order) {
    if (out.parent[v] >= 0) continue;
    int best = -1, best_w = 0;
    for (std::size_t t = 0; t < adj[v].size(); ++t) {
      const int u = adj[v][t];
      if (out.parent[u] >= 0) continue;
      if (weight[v][t] > best_w) {
        best = u;
        best_w = weight[v][t];
      }
    }
    out.parent[v] = next;
    if (best >= 0) out.parent[best] = next;
    ++next;
  }
  std::vector<std::unordered_map<int, int>> acc(next);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t t = 0; t < adj[v].size(); ++t) {
      const int a = out.parent[v], b = out.parent[adj[v][t]];
      if (a != b) acc[a][b] += weight[v][t];
    }
  }
  out.adj.resize(next);
  out.weight.resize(next);
  for (int a = 0; a < next; ++a) {
    std::vector<std::pair<int, int>> nb(acc[a].begin(), acc[a].end());
    std::sort(nb.begin(), nb.end());
    for (auto [b, w] : nb) {
      out.adj[a].push_back(b);
      out.weight[a].push_back(w);
    }
  }
  return out;
}

std::vector<Point> multilevel_component(const Adjacency& adj, const LayoutConfig& c,
                                        std::mt19937_64& rng, MultilevelTrace* trace) {
  if (adj.size() <= c.coarsest_size) return force_directed_component(adj, c, rng);

  std::vector<Coarsening> levels;
  const Adjacency* cur = &adj;
  std::vector<std::vector<int>> unit_weight(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) unit_weight[i].assign(adj[i].size(), 1);
  const std::vector<std::vector<int>>* cur_w = &unit_weight;
  while (cur->size() > c.coarsest_size) {
    Coarsening next = coarsen(*cur, *cur_w, rng);
    if (next.adj.size() * 20 > cur->size() * 19) break;  // matching stalled, e.g. stars
    levels.push_back(std::move(next));
    cur = &levels.back().adj;
    cur_w = &levels.back().weight;
  }

  // Edge length scale per level; level i has k * (7/4)^(i/2).
  const double grow = std::sqrt(1.75);
  const int depth = static_cast<int>(levels.size());
  LayoutConfig coarse_cfg = c;
  coarse_cfg.ideal_edge_length = c.ideal_edge_length * std::pow(grow, depth);
  std::vector<Point> pos = force_directed_component(*cur, coarse_cfg, rng);

  for (int li = depth - 1; li >= 0; --li) {
    const Coarsening& lv = levels[li];
    const Adjacency& fine_adj = li == 0 ? adj : levels[li - 1].adj;
    const double k = c.ideal_edge_length * std::pow(grow, li);
    const double before = total_length(lv.adj, pos);

    std::vector<Point> fine(lv.parent.size());
    for (std::size_t v = 0; v < fine.size(); ++v) {
      const Point& p = pos[lv.parent[v]];
      fine[v] = {p.x + (unit(rng) - 0.5) * 0.2 * k, p.y + (unit(rng) - 0.5) * 0.2 * k};
    }
    SpringRun run = base_run(c, fine.size());
    run.k = k;
    run.t0 = k;
    spring_embed(fine_adj, fine, run, rng);

    // Coarse edge length between child centroids after refinement.
    std::vector<Point> centroid(pos.size());
    std::vector<int> count(pos.size(), 0);
    for (std::size_t v = 0; v < fine.size(); ++v) {
      centroid[lv.parent[v]].x += fine[v].x;
      centroid[lv.parent[v]].y += fine[v].y;
      ++count[lv.parent[v]];
    }
    for (std::size_t a = 0; a < centroid.size(); ++a) {
      centroid[a].x /= count[a];
      centroid[a].y /= count[a];
    }
    MultilevelLevel stats;
    stats.fine_nodes = fine.size();
    stats.coarse_nodes = pos.size();
    stats.coarse_length_before = before;
    stats.coarse_length_after = total_length(lv.adj, centroid);
    if (stats.coarse_length_after > 1.05 * before && stats.coarse_length_after > 0) {
      const double f = 1.05 * before / stats.coarse_length_after;
      Point mid;
      for (const Point& p : fine) {
        mid.x += p.x;
        mid.y += p.y;
      }
      mid.x /= static_cast<double>(fine.size());
      mid.y /= static_cast<double>(fine.size());
      for (Point& p : fine) p = {mid.x + f * (p.x - mid.x), mid.y + f * (p.y - mid.y)};
      stats.coarse_length_after *= f;
      stats.rescaled = true;
    }
    if (trace) trace->levels.push_back(stats);
    pos = std::move(fine);
  }
  return pos;
}

// Shelf packing of component layouts, tallest first, with padding k.
Layout pack(const Graph& g, const std::vector<Component>& comps,
            std::vector<std::vector<Point>>& layouts, double k) {
  struct Box {
    double w, h;
    std::size_t index;
  };
  std::vector<Box> boxes;
  double area = 0.0, widest = 0.0;
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    double minx = INFINITY, miny = INFINITY, maxx = -INFINITY, maxy = -INFINITY;
    for (const Point& p : layouts[i]) {
      minx = std::min(minx, p.x);
      miny = std::min(miny, p.y);
      maxx = std::max(maxx, p.x);
      maxy = std::max(maxy, p.y);
    }
    for (Point& p : layouts[i]) p = {p.x - minx, p.y - miny};
    boxes.push_back({maxx - minx, maxy - miny, i});
    area += (maxx - minx + k) * (maxy - miny + k);
    widest = std::max(widest, maxx - minx);
  }
  std::stable_sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.h > b.h; });
  const double limit = std::max(widest, std::sqrt(area));
  std::vector<Point> out(g.node_count());
  double x = 0, y = 0, row_h = 0;
  for (const Box& b : boxes) {
    if (x > 0 && x + b.w > limit) {
      x = 0;
      y += row_h + k;
      row_h = 0;
    }
    const Component& c = comps[b.index];
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
      out[c.nodes[i]] = {layouts[b.index][i].x + x, layouts[b.index][i].y + y};
    }
    x += b.w + k;
    row_h = std::max(row_h, b.h);
  }
  return Layout(std::move(out));
}

template <class PerComponent>
Layout per_component(const Graph& g, const LayoutConfig& c, PerComponent fn) {
  c.validate();
  if (g.node_count() == 0) return Layout{};
  const std::vector<Component> comps = components(g);
  std::vector<std::vector<Point>> layouts;
  layouts.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::mt19937_64 rng(splitmix(c.seed ^ splitmix(i)));
    layouts.push_back(fn(comps[i].adj, rng));
  }
  return pack(g, comps, layouts, c.ideal_edge_length);
}

}  // namespace

std::string_view algorithm_name(LayoutAlgorithm a) {
  switch (a) {
    case LayoutAlgorithm::kRandom:
      return "random";
    case LayoutAlgorithm::kCircular:
      return "circular";
    case LayoutAlgorithm::kForceDirected:
      return "force-directed";
    case LayoutAlgorithm::kMultilevel:
      return "multilevel";
  }
  return "?";
}

std::optional<LayoutAlgorithm> parse_algorithm(std::string_view name) {
  for (auto a : {LayoutAlgorithm::kRandom, LayoutAlgorithm::kCircular, LayoutAlgorithm::kForceDirected,
                 LayoutAlgorithm::kMultilevel}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

std::string supported_algorithms() { return "random, circular, force-directed, multilevel"; }

void LayoutConfig::validate() const {
  if (iterations <= 0) throw InvalidArgument("iterations must be positive");
  if (!(ideal_edge_length > 0) || !std::isfinite(ideal_edge_length)) {
    throw InvalidArgument("ideal edge length must be finite and > 0");
  }
  if (!(cooling > 0 && cooling < 1)) throw InvalidArgument("cooling must lie in (0, 1)");
  if (coarsest_size < 2) throw InvalidArgument("coarsest size must be at least 2");
}

Layout layout_random(const Graph& g, const LayoutConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  return Layout(random_square(g.node_count(), config.ideal_edge_length, rng));
}

Layout layout_random(const Graph& g, std::uint64_t seed) {
  LayoutConfig c;
  c.seed = seed;
  return layout_random(g, c);
}

Layout layout_circular(const Graph& g, const LayoutConfig& config) {
  config.validate();
  const std::size_t n = g.node_count();
  if (n == 1) return Layout({{0, 0}});
  const double k = config.ideal_edge_length;
  // Chord between neighbours equals k.
  const double radius = n == 0 ? 0 : k / (2 * std::sin(std::numbers::pi / static_cast<double>(n)));
  std::vector<Point> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pos[i] = {radius * std::cos(a), radius * std::sin(a)};
  }
  return Layout(std::move(pos));
}

Layout layout_force_directed(const Graph& g, const LayoutConfig& config) {
  return per_component(g, config, [&](const Adjacency& adj, std::mt19937_64& rng) {
    return force_directed_component(adj, config, rng);
  });
}

Layout layout_multilevel(const Graph& g, const LayoutConfig& config, MultilevelTrace* trace) {
  return per_component(g, config, [&](const Adjacency& adj, std::mt19937_64& rng) {
    return multilevel_component(adj, config, rng, trace);
  });
}

Layout compute_layout(const Graph& g, const LayoutConfig& config) {
  switch (config.algorithm) {
    case LayoutAlgorithm::kRandom:
      return layout_random(g, config);
    case LayoutAlgorithm::kCircular:
      return layout_circular(g, config);
    case LayoutAlgorithm::kForceDirected:
      return layout_force_directed(g, config);
    case LayoutAlgorithm::kMultilevel:
      return layout_multilevel(g, config);
  }
  throw InvalidArgument("unknown layout algorithm");
}

}  // namespace inka
