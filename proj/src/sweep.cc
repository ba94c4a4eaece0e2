// Bentley-Ottmann crossing counter.
//
// Events are processed in lexicographic (x, y) order. The status holds the
// segments cut by a sweep line through the current event, tilted by an
// infinitesimal angle so that points straight above the event have not been
// swept yet. Vertical segments therefore meet the line exactly at the event
// and sort after every other segment through it.
//
// Every predicate is evaluated on doubles with a forward error bound and
// falls back to GMP rationals when the bound cannot decide the sign, so the
// status order is always consistent and degenerate inputs (shared endpoints,
// T-junctions, collinear overlaps, many segments through one point) need no
// perturbation.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "exact.h"
#include "inka/geometry.h"

namespace inka {
namespace {

using detail::Approx;
using detail::compare_xy;
using detail::orient_sign;

struct SweepSegment {
  Point l;  // lexicographically first endpoint
  Point r;
  bool vertical = false;
};

struct ExactPoint {
  mpq_class x;
  mpq_class y;
};

struct EventPoint {
  Approx x;
  Approx y;
  int s1 = -1;  // crossing events remember the pair that defines them
  int s2 = -1;
  mutable std::shared_ptr<const ExactPoint> exact;

  static EventPoint at(const Point& p) { return {Approx::exact(p.x), Approx::exact(p.y), -1, -1, nullptr}; }
};

struct Probe {};

class Sweep {
 public:
  explicit Sweep(std::vector<SweepSegment> segments)
      : segs_(std::move(segments)), events_(EventLess{this}), status_(StatusLess{this}) {}

  std::int64_t run();

 private:
  struct EventLess {
    const Sweep* sweep;
    bool operator()(const EventPoint& a, const EventPoint& b) const {
      return sweep->compare_points(a, b) < 0;
    }
  };

  struct StatusLess {
    using is_transparent = void;
    const Sweep* sweep;
    bool operator()(int a, int b) const { return sweep->compare_at_current(a, b) < 0; }
    bool operator()(int a, Probe) const { return sweep->side_of(a, sweep->current_) < 0; }
    bool operator()(Probe, int b) const { return sweep->side_of(b, sweep->current_) > 0; }
  };

  const ExactPoint& exact_of(const EventPoint& p) const;
  int compare_points(const EventPoint& a, const EventPoint& b) const;
  int side_of(int s, const EventPoint& p) const;
  int compare_slopes(int a, int b) const;
  int compare_at_current(int a, int b) const;
  bool properly_cross(int a, int b) const;
  EventPoint crossing_event(int a, int b) const;
  void find_new_event(int a, int b);

  std::vector<SweepSegment> segs_;
  std::map<EventPoint, std::vector<int>, EventLess> events_;
  std::set<int, StatusLess> status_;
  EventPoint current_;
};

mpq_class q(double v) { return mpq_class(v); }

const ExactPoint& Sweep::exact_of(const EventPoint& p) const {
  if (!p.exact) {
    if (p.s1 < 0) {
      p.exact = std::make_shared<ExactPoint>(ExactPoint{q(p.x.v), q(p.y.v)});
    } else {
      const SweepSegment& a = segs_[p.s1];
      const SweepSegment& b = segs_[p.s2];
      const mpq_class d1x = q(a.r.x) - q(a.l.x), d1y = q(a.r.y) - q(a.l.y);
      const mpq_class d2x = q(b.r.x) - q(b.l.x), d2y = q(b.r.y) - q(b.l.y);
      const mpq_class den = d1x * d2y - d1y * d2x;
      const mpq_class t = ((q(b.l.x) - q(a.l.x)) * d2y - (q(b.l.y) - q(a.l.y)) * d2x) / den;
      p.exact = std::make_shared<ExactPoint>(ExactPoint{q(a.l.x) + t * d1x, q(a.l.y) + t * d1y});
    }
  }
  return *p.exact;
}

int Sweep::compare_points(const EventPoint& a, const EventPoint& b) const {
  if (a.s1 >= 0 && a.s1 == b.s1 && a.s2 == b.s2) return 0;  // rediscovered crossing
  int s = (a.x - b.x).sign();
  if (s == 2) s = sgn(exact_of(a).x - exact_of(b).x);
  if (s != 0) return s;
  s = (a.y - b.y).sign();
  if (s == 2) s = sgn(exact_of(a).y - exact_of(b).y);
  return s;
}

// Sign of (y of segment s on the sweep line) - p.y.
int Sweep::side_of(int s, const EventPoint& p) const {
  if (s == p.s1 || s == p.s2) return 0;  // a crossing lies on both of its segments
  const SweepSegment& seg = segs_[s];
  if (seg.vertical) {
    auto below = [&](double y) {  // sign(y - p.y)
      int c = (Approx::exact(y) - p.y).sign();
      if (c == 2) c = sgn(q(y) - exact_of(p).y);
      return c;
    };
    if (below(seg.l.y) > 0) return 1;
    if (below(seg.r.y) < 0) return -1;
    return 0;
  }
  const Approx dx = Approx::exact(seg.r.x) - Approx::exact(seg.l.x);
  const Approx dy = Approx::exact(seg.r.y) - Approx::exact(seg.l.y);
  const Approx det = dx * (p.y - Approx::exact(seg.l.y)) - dy * (p.x - Approx::exact(seg.l.x));
  int s_det = det.sign();
  if (s_det == 2) {
    const ExactPoint& e = exact_of(p);
    s_det = sgn((q(seg.r.x) - q(seg.l.x)) * (e.y - q(seg.l.y)) -
                (q(seg.r.y) - q(seg.l.y)) * (e.x - q(seg.l.x)));
  }
  return -s_det;
}

// Vertical segments count as +infinity.
int Sweep::compare_slopes(int a, int b) const {
  const SweepSegment& sa = segs_[a];
  const SweepSegment& sb = segs_[b];
  if (sa.vertical || sb.vertical) return static_cast<int>(sa.vertical) - static_cast<int>(sb.vertical);
  const Approx dxa = Approx::exact(sa.r.x) - Approx::exact(sa.l.x);
  const Approx dya = Approx::exact(sa.r.y) - Approx::exact(sa.l.y);
  const Approx dxb = Approx::exact(sb.r.x) - Approx::exact(sb.l.x);
  const Approx dyb = Approx::exact(sb.r.y) - Approx::exact(sb.l.y);
  int s = (dya * dxb - dyb * dxa).sign();
  if (s == 2) {
    s = sgn((q(sa.r.y) - q(sa.l.y)) * (q(sb.r.x) - q(sb.l.x)) -
            (q(sb.r.y) - q(sb.l.y)) * (q(sa.r.x) - q(sa.l.x)));
  }
  return s;
}

int Sweep::compare_at_current(int a, int b) const {
  if (a == b) return 0;
  const int ca = side_of(a, current_);
  const int cb = side_of(b, current_);
  if (ca != cb) return ca < cb ? -1 : 1;

  auto tie_break = [&](bool before_crossing) {
    const int s = before_crossing ? compare_slopes(b, a) : compare_slopes(a, b);
    if (s != 0) return s;
    return a < b ? -1 : 1;
  };
  if (ca == 0) return tie_break(false);

  const SweepSegment& sa = segs_[a];
  const SweepSegment& sb = segs_[b];
  if (sa.vertical || sb.vertical) {
    throw std::logic_error("vertical segment in the status does not contain the event point");
  }
  // sign(y_a(x0) - y_b(x0)), scaled by the positive x extents of both.
  const Approx x0 = current_.x;
  const Approx dxa = Approx::exact(sa.r.x) - Approx::exact(sa.l.x);
  const Approx dya = Approx::exact(sa.r.y) - Approx::exact(sa.l.y);
  const Approx dxb = Approx::exact(sb.r.x) - Approx::exact(sb.l.x);
  const Approx dyb = Approx::exact(sb.r.y) - Approx::exact(sb.l.y);
  const Approx ya = Approx::exact(sa.l.y) * dxa + (x0 - Approx::exact(sa.l.x)) * dya;
  const Approx yb = Approx::exact(sb.l.y) * dxb + (x0 - Approx::exact(sb.l.x)) * dyb;
  int s = (dxb * ya - dxa * yb).sign();
  if (s == 2) {
    const mpq_class& ex = exact_of(current_).x;
    const mpq_class qdxa = q(sa.r.x) - q(sa.l.x), qdxb = q(sb.r.x) - q(sb.l.x);
    const mpq_class qya = q(sa.l.y) * qdxa + (ex - q(sa.l.x)) * (q(sa.r.y) - q(sa.l.y));
    const mpq_class qyb = q(sb.l.y) * qdxb + (ex - q(sb.l.x)) * (q(sb.r.y) - q(sb.l.y));
    s = sgn(qdxb * qya - qdxa * qyb);
  }
  if (s != 0) return s;
  // Both pass through (x0, y*). Above the event the crossing lies ahead of
  // the sweep line, below it the crossing has already been processed.
  return tie_break(ca > 0);
}

bool Sweep::properly_cross(int a, int b) const {
  const SweepSegment& sa = segs_[a];
  const SweepSegment& sb = segs_[b];
  if (sa.r.x < sb.l.x || sb.r.x < sa.l.x) return false;
  if (std::max(sa.l.y, sa.r.y) < std::min(sb.l.y, sb.r.y) ||
      std::max(sb.l.y, sb.r.y) < std::min(sa.l.y, sa.r.y)) {
    return false;
  }
  return orient_sign(sa.l, sa.r, sb.l) * orient_sign(sa.l, sa.r, sb.r) < 0 &&
         orient_sign(sb.l, sb.r, sa.l) * orient_sign(sb.l, sb.r, sa.r) < 0;
}

EventPoint Sweep::crossing_event(int a, int b) const {
  const SweepSegment& sa = segs_[a];
  const SweepSegment& sb = segs_[b];
  const Approx d1x = Approx::exact(sa.r.x) - Approx::exact(sa.l.x);
  const Approx d1y = Approx::exact(sa.r.y) - Approx::exact(sa.l.y);
  const Approx d2x = Approx::exact(sb.r.x) - Approx::exact(sb.l.x);
  const Approx d2y = Approx::exact(sb.r.y) - Approx::exact(sb.l.y);
  const Approx den = d1x * d2y - d1y * d2x;
  const Approx num = (Approx::exact(sb.l.x) - Approx::exact(sa.l.x)) * d2y -
                     (Approx::exact(sb.l.y) - Approx::exact(sa.l.y)) * d2x;
  const Approx t = num / den;
  EventPoint e{Approx::exact(sa.l.x) + t * d1x, Approx::exact(sa.l.y) + t * d1y, std::min(a, b), std::max(a, b), nullptr};
  return e;
}

void Sweep::find_new_event(int a, int b) {
  if (!properly_cross(a, b)) return;
  EventPoint e = crossing_event(a, b);
  if (compare_points(e, current_) > 0) events_.try_emplace(std::move(e));
}

std::int64_t Sweep::run() {
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    events_[EventPoint::at(segs_[i].l)].push_back(static_cast<int>(i));
    events_.try_emplace(EventPoint::at(segs_[i].r));
  }

  std::int64_t crossings = 0;
  std::vector<int> ending;
  std::vector<int> interior;
  while (!events_.empty()) {
    auto node = events_.extract(events_.begin());
    current_ = std::move(node.key());
    const std::vector<int> upper = std::move(node.mapped());

    ending.clear();
    interior.clear();
    const auto lo = status_.lower_bound(Probe{});
    auto hi = lo;
    for (; hi != status_.end() && side_of(*hi, current_) == 0; ++hi) {
      const bool ends_here = compare_points(EventPoint::at(segs_[*hi].r), current_) == 0;
      (ends_here ? ending : interior).push_back(*hi);
    }
    status_.erase(lo, hi);

    // Segments through the event in their interiors cross pairwise, except
    // collinear ones.
    if (interior.size() > 1) {
      std::sort(interior.begin(), interior.end(),
                [&](int a, int b) { return compare_slopes(a, b) < 0; });
      const auto k = static_cast<std::int64_t>(interior.size());
      crossings += k * (k - 1) / 2;
      std::size_t run_start = 0;
      for (std::size_t i = 1; i <= interior.size(); ++i) {
        if (i == interior.size() || compare_slopes(interior[run_start], interior[i]) != 0) {
          const auto run = static_cast<std::int64_t>(i - run_start);
          crossings -= run * (run - 1) / 2;
          run_start = i;
        }
      }
    }

    for (int s : upper) status_.insert(s);
    for (int s : interior) status_.insert(s);

    if (upper.empty() && interior.empty()) {
      const auto right = status_.lower_bound(Probe{});
      if (right != status_.end() && right != status_.begin()) find_new_event(*std::prev(right), *right);
    } else {
      const auto first = status_.lower_bound(Probe{});
      const auto last = status_.upper_bound(Probe{});
      if (first != status_.begin()) find_new_event(*std::prev(first), *first);
      if (last != status_.end()) find_new_event(*std::prev(last), *last);
    }
  }
  return crossings;
}

}  // namespace

std::int64_t count_crossings_sweep(std::span<const Segment> segments) {
  std::vector<SweepSegment> segs;
  segs.reserve(segments.size());
  for (const Segment& s : segments) {
    const int c = compare_xy(s.p, s.q);
    if (c == 0) continue;  // a point crosses nothing
    SweepSegment out;
    out.l = c < 0 ? s.p : s.q;
    out.r = c < 0 ? s.q : s.p;
    out.vertical = out.l.x == out.r.x;
    segs.push_back(out);
  }
  return Sweep(std::move(segs)).run();
}

}  // namespace inka
