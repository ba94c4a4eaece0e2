#include "inka/ink.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "inka/error.h"

namespace inka {
namespace {

constexpr double kPi = std::numbers::pi;

double aggregate(std::size_t n, std::size_t m, double r, double w, double L, std::int64_t cr) {
  return ink_components(n, m, r, w, L, cr).total();
}

}  // namespace

InkComponents ink_components(std::size_t n, std::size_t m, double r, double w, double L,
                             std::int64_t cr) {
  if (r < 0 || w < 0 || L < 0 || cr < 0) throw InvalidArgument("ink inputs must be >= 0");
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return {nd * kPi * r * r, w * (L - 2.0 * md * r), w * w * static_cast<double>(cr)};
}

InkComponents ink_components(const BoldDrawing& d, const DrawingMetrics& metrics,
                             EdgeInkMode mode) {
  const auto& p = d.params();
  InkComponents c = ink_components(d.graph().node_count(), d.graph().edge_count(), p.radius,
                                   p.width, metrics.total_edge_length, metrics.crossings);
  if (mode == EdgeInkMode::kClamped) {
    if (metrics.edge_lengths.size() != d.graph().edge_count()) {
      throw InvalidArgument("clamped edge ink needs one length per edge");
    }
    double sum = 0.0;
    for (double l : metrics.edge_lengths) sum += std::max(0.0, l - 2.0 * p.radius);
    c.ink_edges = p.width * sum;
  }
  return c;
}

InkReport ink_total(const BoldDrawing& d, const DrawingMetrics& metrics, EdgeInkMode mode) {
  const InkComponents c = ink_components(d, metrics, mode);
  InkReport rep;
  rep.ink_nodes = c.ink_nodes;
  rep.ink_edges = c.ink_edges;
  rep.overlap = c.overlap;
  rep.ink_total = c.total();
  if (d.graph().node_count() == 0) {
    rep.feasible = true;
    return rep;
  }
  if (!(metrics.area > 0.0)) throw InvalidArgument("drawing density undefined: area is zero");
  rep.density = rep.ink_total / metrics.area;
  rep.feasible = rep.ink_total <= d.params().gamma * metrics.area;
  return rep;
}

bool check_area_constraint(double ink, double A, double gamma) {
  if (!(A > 0.0)) throw InvalidArgument("area must be > 0");
  return ink <= gamma * A;
}

Interval radius_bounds(std::size_t n, std::size_t m, double w, double L, std::int64_t cr,
                       double gamma, double A) {
  if (n == 0) throw InvalidArgument("radius bounds need n > 0");
  const double pn = kPi * static_cast<double>(n);
  const double mw = static_cast<double>(m) * w;
  const double B = gamma * A - w * L + w * w * static_cast<double>(cr) + mw * mw / pn;
  if (B < 0) throw InfeasibleError("no radius satisfies the density ceiling");
  const double root = std::sqrt(B / pn);
  const double centre = mw / pn;
  return {std::max(0.0, centre - root), centre + root};
}

WidthBounds width_bounds(std::size_t n, std::size_t m, double r, double L, std::int64_t cr,
                         double gamma, double A) {
  if (n == 0) throw InvalidArgument("width bounds need n > 0");
  const double c0 = static_cast<double>(n) * kPi * r * r;
  const double budget = gamma * A - c0;
  if (budget < 0) throw InfeasibleError("the disks alone exceed the density ceiling");
  const double b = L - 2.0 * static_cast<double>(m) * r;
  const double inf = std::numeric_limits<double>::infinity();
  const double a = static_cast<double>(cr);

  WidthBounds out;
  if (a == 0) {
    if (b > 0) {
      out.nonnegative_max = inf;
      out.low = {0.0, budget / b};
    } else if (b < 0) {
      out.nonnegative_max = c0 / -b;
      out.low = {0.0, out.nonnegative_max};
    } else {
      out.nonnegative_max = inf;
      out.low = {0.0, inf};
    }
    return out;
  }

  // -a w^2 + b w + c0 is concave; it is >= 0 on [0, w_plus].
  const double w_plus = b >= 0 ? (b + std::sqrt(b * b + 4 * a * c0)) / (2 * a)
                               : 2 * c0 / (std::sqrt(b * b + 4 * a * c0) - b);
  out.nonnegative_max = w_plus;
  const double disc = b * b - 4 * a * budget;
  if (b <= 0 || disc < 0) {
    out.low = {0.0, w_plus};
    return out;
  }
  const double sq = std::sqrt(disc);
  const double w1 = 2 * budget / (b + sq);
  const double w2 = (b + sq) / (2 * a);
  out.low = {0.0, std::min(w1, w_plus)};
  if (w2 < w_plus) out.high = Interval{w2, w_plus};
  return out;
}

MinInk min_ink_radius(std::size_t n, std::size_t m, double w, double L, std::int64_t cr) {
  if (n == 0) throw InvalidArgument("minimum-ink radius needs n > 0");
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  MinInk out;
  out.r_star = w * (md / nd) / kPi;
  out.min_ink = w * L - w * w * static_cast<double>(cr) - md * md * w * w / (kPi * nd);
  return out;
}

double scale_ink_delta(double w, double L, double sigma) {
  if (!(sigma > 0)) throw InvalidArgument("scale factor must be > 0");
  return w * (sigma - 1.0) * L;
}

double zoom_ink(double ink, double zeta) {
  if (!(zeta > 0)) throw InvalidArgument("zoom factor must be > 0");
  return zeta * ink;
}

PlanarFormulas planar_formulas(std::size_t n, std::size_t m, double r, double w, double L,
                               double gamma, double A) {
  const double nd = static_cast<double>(n);
  PlanarFormulas out;
  out.ink = aggregate(n, m, r, w, L, 0);
  const double edge_room = L - 2.0 * static_cast<double>(m) * r;
  if (edge_room > 0) out.w_bound = (gamma * A - nd * kPi * r * r) / edge_room;
  if (w > 0) out.L_max = (gamma * A - 12 * r * w - nd * (kPi * r * r - 6 * w * r)) / w;
  return out;
}

std::optional<EqualLengthBounds> equal_length_bounds(std::size_t m, double w, std::int64_t cr,
                                                     double gamma, double A, double l) {
  if (m == 0 || !(w > 0)) return std::nullopt;
  const double md = static_cast<double>(m);
  const double shift = w * static_cast<double>(cr) / md;
  return EqualLengthBounds{{shift, gamma * A / (w * md) + shift}, md * l / w};
}

PartialEdgeFormulas partial_edge_formulas(std::size_t n, std::size_t m, double r, double w,
                                          double L, double p, std::int64_t cr_full,
                                          std::int64_t cr_partial, double gamma, double A) {
  if (!(p > 0 && p <= 1)) throw InvalidArgument("partial edge ratio must lie in (0, 1]");
  PartialEdgeFormulas out;
  out.ink_partial = aggregate(n, m, r, w, p * L, cr_partial);
  if (w > 0) {
    out.necessity_holds =
        static_cast<double>(cr_full - cr_partial) <= (1.0 - p) * L / w;
    const double hi = p * L / w;
    out.cr_partial_interval = Interval{std::max(0.0, hi - gamma * A / (w * w)), hi};
  } else {
    out.necessity_holds = true;
  }
  return out;
}

ClarityReport clarity_decomposition(const BoldDrawing& d, const DrawingMetrics& metrics,
                                    EdgeInkMode mode) {
  const InkComponents c = ink_components(d, metrics, mode);
  return {c.ink_nodes, c.ink_edges, c.overlap};
}

double width_delta_ink(double w, double w_prime, double L, std::size_t m, double r,
                       std::int64_t cr) {
  return (w_prime - w) *
         (L - 2.0 * static_cast<double>(m) * r - (w + w_prime) * static_cast<double>(cr));
}

double radius_delta_ink(std::size_t n, double r, double r_prime) {
  return static_cast<double>(n) * kPi * (r_prime * r_prime - r * r);
}

RadiusDeltaCheck radius_delta_check(std::size_t n, std::size_t m, double w, double L,
                                    std::int64_t cr, double r, double r_prime) {
  RadiusDeltaCheck out;
  out.identity = radius_delta_ink(n, r, r_prime);
  out.direct = aggregate(n, m, r_prime, w, L, cr) - aggregate(n, m, r, w, L, cr);
  out.discrepancy = out.direct - out.identity;
  return out;
}

BoundsReport bounds_report(const BoldDrawing& d, const DrawingMetrics& metrics) {
  const std::size_t n = d.graph().node_count();
  const std::size_t m = d.graph().edge_count();
  const auto& p = d.params();
  const double L = metrics.total_edge_length;
  const std::int64_t cr = metrics.crossings;
  const double A = metrics.area;
  BoundsReport out;
  if (n == 0) return out;
  try {
    out.r_interval = radius_bounds(n, m, p.width, L, cr, p.gamma, A);
  } catch (const InfeasibleError&) {
  }
  try {
    out.w_interval = width_bounds(n, m, p.radius, L, cr, p.gamma, A).low;
  } catch (const InfeasibleError&) {
  }
  if (p.radius == 0 && m > 0) {
    const auto [lo, hi] = std::minmax_element(metrics.edge_lengths.begin(), metrics.edge_lengths.end());
    if (lo != metrics.edge_lengths.end() && *hi - *lo <= 1e-9 * *hi) {
      if (auto eq = equal_length_bounds(m, p.width, cr, p.gamma, A, *hi)) {
        out.l_interval = eq->l_interval;
        out.cr_bound = eq->cr_bound;
      }
    }
  }
  if (cr == 0 && p.width > 0) out.planar_L_max = planar_formulas(n, m, p.radius, p.width, L, p.gamma, A).L_max;
  out.min_ink = min_ink_radius(n, m, p.width, L, cr);
  return out;
}

}  // namespace inka
