#pragma once

// Closed-form ink arithmetic: the total-ink equation, the area budget and
// every bound, minimiser and delta derived from it.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "inka/model.h"

namespace inka {

// kClamped drops the edge term of an edge shorter than 2r instead of letting
// it go negative. kStrict evaluates the aggregate formula verbatim.
enum class EdgeInkMode { kClamped, kStrict };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return v >= lo && v <= hi; }
};

struct InkComponents {
  double ink_nodes = 0.0;
  double ink_edges = 0.0;
  double overlap = 0.0;

  double total() const { return ink_nodes + ink_edges - overlap; }
};

// Aggregate form: n*pi*r^2, w*(L - 2mr), w^2*cr. Inputs must be >= 0.
InkComponents ink_components(std::size_t n, std::size_t m, double r, double w, double L,
                             std::int64_t cr);

// Per-drawing form. In kClamped mode each edge contributes w*max(0, l_e - 2r),
// which needs metrics.edge_lengths.
InkComponents ink_components(const BoldDrawing& d, const DrawingMetrics& metrics,
                             EdgeInkMode mode = EdgeInkMode::kClamped);

// Throws InvalidArgument when the area is zero for a non-empty graph.
InkReport ink_total(const BoldDrawing& d, const DrawingMetrics& metrics,
                    EdgeInkMode mode = EdgeInkMode::kClamped);

// ink <= gamma * A. Throws InvalidArgument for A <= 0.
bool check_area_constraint(double ink, double A, double gamma);

// Radii whose ink stays within gamma*A. Throws InfeasibleError when none does.
Interval radius_bounds(std::size_t n, std::size_t m, double w, double L, std::int64_t cr,
                       double gamma, double A);

struct WidthBounds {
  Interval low;                  // the feasible piece that contains w = 0
  std::optional<Interval> high;  // second piece past the ink maximum, when it exists
  double nonnegative_max = 0.0;  // largest w keeping the ink formula >= 0
};

// Solves 0 <= n*pi*r^2 + w(L - 2mr) - w^2*cr <= gamma*A for w >= 0.
// Throws InfeasibleError when even w = 0 exceeds the budget.
WidthBounds width_bounds(std::size_t n, std::size_t m, double r, double L, std::int64_t cr,
                         double gamma, double A);

struct MinInk {
  double r_star = 0.0;
  double min_ink = 0.0;
};

// r* = w*(m/n)/pi and the ink at r*.
MinInk min_ink_radius(std::size_t n, std::size_t m, double w, double L, std::int64_t cr);

// Ink change when every edge length is multiplied by sigma and r, w stay put.
double scale_ink_delta(double w, double L, double sigma);

// Ink after magnifying the drawing area by zeta.
double zoom_ink(double ink, double zeta);

struct PlanarFormulas {
  double ink = 0.0;
  std::optional<double> w_bound;  // absent when L - 2mr <= 0
  std::optional<double> L_max;    // maximal planar case, absent when w == 0
};

PlanarFormulas planar_formulas(std::size_t n, std::size_t m, double r, double w, double L,
                               double gamma, double A);

struct EqualLengthBounds {
  Interval l_interval;
  double cr_bound = 0.0;  // m*l/w
};

// Zero-radius drawings whose m edges all have length l. Absent when m or w is 0.
std::optional<EqualLengthBounds> equal_length_bounds(std::size_t m, double w, std::int64_t cr,
                                                     double gamma, double A, double l);

struct PartialEdgeFormulas {
  double ink_partial = 0.0;
  bool necessity_holds = false;
  std::optional<Interval> cr_partial_interval;  // absent when w == 0
};

PartialEdgeFormulas partial_edge_formulas(std::size_t n, std::size_t m, double r, double w,
                                          double L, double p, std::int64_t cr_full,
                                          std::int64_t cr_partial, double gamma, double A);

struct ClarityReport {
  double clarity_nodes = 0.0;
  double clarity_edges = 0.0;
  double ambiguity_overlap = 0.0;
};

ClarityReport clarity_decomposition(const BoldDrawing& d, const DrawingMetrics& metrics,
                                    EdgeInkMode mode = EdgeInkMode::kClamped);

// (w' - w) * (L - 2mr - (w + w') * cr)
double width_delta_ink(double w, double w_prime, double L, std::size_t m, double r,
                       std::int64_t cr);

// n*pi*(r'^2 - r^2). Holds only if the edge term is unaffected by r.
double radius_delta_ink(std::size_t n, double r, double r_prime);

struct RadiusDeltaCheck {
  double identity = 0.0;     // radius_delta_ink
  double direct = 0.0;       // difference of the aggregate formula at r' and r
  double discrepancy = 0.0;  // direct - identity == -2mw(r' - r)
};

RadiusDeltaCheck radius_delta_check(std::size_t n, std::size_t m, double w, double L,
                                    std::int64_t cr, double r, double r_prime);

// Everything above that applies to one measured drawing.
struct BoundsReport {
  std::optional<Interval> r_interval;
  std::optional<Interval> w_interval;
  std::optional<Interval> l_interval;  // only when all edges have the same length
  std::optional<double> cr_bound;
  std::optional<double> planar_L_max;  // only for crossing-free drawings with w > 0
  std::optional<MinInk> min_ink;
};

BoundsReport bounds_report(const BoldDrawing& d, const DrawingMetrics& metrics);

}  // namespace inka
