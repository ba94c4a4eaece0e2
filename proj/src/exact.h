#pragma once

// Floating-point filter and exact fallbacks shared by the crossing counters.

#include <gmpxx.h>

#include <cmath>
#include <limits>

#include "inka/model.h"

namespace inka::detail {

inline constexpr double kUnitRoundoff = 0x1p-53;

// A double together with a bound on its absolute distance from the exact
// real value it approximates.
struct Approx {
  double v = 0.0;
  double e = 0.0;

  static Approx exact(double x) { return {x, 0.0}; }

  // Sign of the exact value when the bound decides it, otherwise 2.
  int sign() const {
    if (e == 0.0 || std::abs(v) > e) return (v > 0.0) - (v < 0.0);
    return 2;
  }
};

inline Approx operator+(Approx a, Approx b) {
  const double v = a.v + b.v;
  return {v, (a.e + b.e) * (1.0 + 4.0 * kUnitRoundoff) + 2.0 * kUnitRoundoff * std::abs(v)};
}

inline Approx operator-(Approx a, Approx b) {
  const double v = a.v - b.v;
  return {v, (a.e + b.e) * (1.0 + 4.0 * kUnitRoundoff) + 2.0 * kUnitRoundoff * std::abs(v)};
}

inline Approx operator*(Approx a, Approx b) {
  const double v = a.v * b.v;
  const double prop = std::abs(a.v) * b.e + std::abs(b.v) * a.e + a.e * b.e;
  return {v, prop * (1.0 + 8.0 * kUnitRoundoff) + 2.0 * kUnitRoundoff * std::abs(v)};
}

inline Approx operator/(Approx a, Approx b) {
  const double v = a.v / b.v;
  const double denom = std::abs(b.v) - b.e;
  if (!(denom > 0.0)) return {v, std::numeric_limits<double>::infinity()};
  const double prop = (a.e + std::abs(v) * b.e) / denom;
  return {v, prop * (1.0 + 16.0 * kUnitRoundoff) + 2.0 * kUnitRoundoff * std::abs(v)};
}

inline int sign_of(const mpq_class& q) { return sgn(q); }

// Exact sign of the orientation determinant of (a, b, c): positive when c
// lies to the left of the directed line a -> b.
inline int orient_sign(const Point& a, const Point& b, const Point& c) {
  const double l = (b.x - a.x) * (c.y - a.y);
  const double r = (b.y - a.y) * (c.x - a.x);
  const double det = l - r;
  // Shewchuk's orient2d error bound for the plain evaluation.
  const double bound = 3.3306690738754716e-16 * (std::abs(l) + std::abs(r));
  if (det > bound || -det > bound) return (det > 0.0) - (det < 0.0);
  const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const mpq_class d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return sgn(d);
}

// Lexicographic (x, then y) comparison of exact double points.
inline int compare_xy(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x ? -1 : 1;
  if (a.y != b.y) return a.y < b.y ? -1 : 1;
  return 0;
}

}  // namespace inka::detail
