#include "uncsimp/endpoint_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace uncsimp {

namespace {

// Unit vector pointing from `from` away through `to`; falls back to the chord
// normal (or x axis) when the two coincide.
Point away_dir(Point to, Point from, const Segment& chord) {
  Point d = to - from;
  double n = norm(d);
  if (n > tolerance()) return (1.0 / n) * d;
  Point cd = chord.dir();
  double cn = norm(cd);
  if (cn > tolerance()) return (1.0 / cn) * perp(cd);
  return {1.0, 0.0};
}

Point farthest_in_region(const Region& r, const Segment& chord) {
  if (auto* d = std::get_if<DiskRegion>(&r)) {
    Point foot = closest_point_on_segment(d->center, chord.a, chord.b);
    return d->center + d->radius * away_dir(d->center, foot, chord);
  }
  const std::vector<Point> v = region_vertices(r);
  Point best = v[0];
  double bd = point_segment_distance(v[0], chord.a, chord.b);
  for (size_t i = 1; i < v.size(); ++i) {
    double di = point_segment_distance(v[i], chord.a, chord.b);
    if (di > bd) {
      bd = di;
      best = v[i];
    }
  }
  return best;
}

}  // namespace

double hausdorff_to_chord(const std::vector<Point>& poly) {
  if (poly.size() < 2) return 0.0;
  double worst = 0.0;
  for (const Point& p : poly)
    worst = std::max(worst, point_segment_distance(p, poly.front(), poly.back()));
  return worst;
}

bool frechet_to_chord(const std::vector<Point>& poly, double eps, GreedyTrace* trace) {
  if (poly.size() < 2) return true;
  Segment chord{poly.front(), poly.back()};
  double s = 1.0;
  for (size_t i = 1; i + 1 < poly.size(); ++i) {
    Interval w = segment_disk_interval(chord, poly[i], eps, s);
    if (w.empty()) {
      if (trace) trace->fail_index = i;
      return false;
    }
    s = w.lo;
    if (trace) trace->s.push_back(s);
  }
  return true;
}

double hausdorff_fixed(const UncertainCurve& c, size_t lo, size_t hi, Point p_first,
                       Point p_last) {
  Segment chord{p_first, p_last};
  double worst = 0.0;
  for (size_t i = lo + 1; i < hi; ++i) {
    const Region& r = c.points[i];
    if (auto* d = std::get_if<DiskRegion>(&r)) {
      worst = std::max(worst, point_segment_distance(d->center, chord.a, chord.b) + d->radius);
    } else {
      for (Point p : region_vertices(r))
        worst = std::max(worst, point_segment_distance(p, chord.a, chord.b));
    }
  }
  return worst;
}

namespace {

// Greedy matcher over finitely many candidate points per interior region.
// The region's true delay maximum is attained at these candidates (options,
// or vertices of a convex region), so the decision is exact.
template <class OptionsFn>
bool frechet_over_options(size_t lo, size_t hi, const Segment& chord, double eps,
                          OptionsFn&& options, GreedyTrace* trace, Realisation* witness) {
  double s = 1.0;
  std::vector<Point> chosen;
  if (witness) chosen.reserve(hi - lo);
  for (size_t i = lo + 1; i < hi; ++i) {
    const std::vector<Point>& opts = options(i);
    double best = -1.0;
    Point best_point = opts[0];
    for (const Point& p : opts) {
      Interval w = segment_disk_interval(chord, p, eps, s);
      if (w.empty()) {
        if (trace) trace->fail_index = i;
        if (witness) {
          witness->clear();
          witness->push_back(chord.a);
          for (Point q : chosen) witness->push_back(q);
          witness->push_back(p);
          for (size_t k = i + 1; k < hi; ++k) witness->push_back(options(k)[0]);
          witness->push_back(chord.b);
        }
        return false;
      }
      if (w.lo > best) {
        best = w.lo;
        best_point = p;
      }
    }
    s = best;
    if (trace) trace->s.push_back(s);
    if (witness) chosen.push_back(best_point);
  }
  return true;
}

bool frechet_disks(const UncertainCurve& c, size_t lo, size_t hi, const Segment& chord,
                   double eps, GreedyTrace* trace, Realisation* witness) {
  double s = 1.0;
  std::vector<double> reached;
  for (size_t i = lo + 1; i < hi; ++i) {
    const auto& d = std::get<DiskRegion>(c.points[i]);
    Interval w = segment_disk_interval(chord, d.center, eps - d.radius, s);
    if (w.empty()) {
      if (trace) trace->fail_index = i;
      if (witness) {
        // Best-effort realisation: pin each earlier disk at the boundary point
        // that presses the matcher against its reached parameter, push the
        // failing disk away from the still-reachable chord part, and leave the
        // rest at their centers. Callers re-verify before trusting it.
        witness->clear();
        witness->push_back(chord.a);
        for (size_t k = lo + 1; k < i; ++k) {
          const auto& dk = std::get<DiskRegion>(c.points[k]);
          Point anchor = chord.point(reached[k - lo - 1]);
          witness->push_back(dk.center + dk.radius * away_dir(dk.center, anchor, chord));
        }
        Point foot = closest_point_on_segment(d.center, chord.point(s), chord.b);
        witness->push_back(d.center + d.radius * away_dir(d.center, foot, chord));
        for (size_t k = i + 1; k < hi; ++k)
          witness->push_back(std::get<DiskRegion>(c.points[k]).center);
        witness->push_back(chord.b);
      }
      return false;
    }
    s = w.lo;
    reached.push_back(s);
    if (trace) trace->s.push_back(s);
  }
  return true;
}

}  // namespace

bool frechet_fixed(const UncertainCurve& c, size_t lo, size_t hi, Point p_first, Point p_last,
                   double eps, GreedyTrace* trace, Realisation* witness) {
  Segment chord{p_first, p_last};
  switch (c.model) {
    case Model::disk:
      return frechet_disks(c, lo, hi, chord, eps, trace, witness);
    case Model::indecisive:
    case Model::polygon:
      return frechet_over_options(
          lo, hi, chord, eps,
          [&](size_t i) -> const std::vector<Point>& { return region_vertices_ref(c.points[i]); },
          trace, witness);
    case Model::segment: {
      std::vector<Point> scratch;
      return frechet_over_options(
          lo, hi, chord, eps,
          [&](size_t i) -> const std::vector<Point>& {
            scratch = region_vertices(c.points[i]);
            return scratch;
          },
          trace, witness);
    }
  }
  throw std::logic_error("unreachable model");
}

bool fixed_endpoint_check(const UncertainCurve& c, size_t lo, size_t hi, Point p_first,
                          Point p_last, double eps, Metric metric, GreedyTrace* trace,
                          Realisation* witness) {
  if (metric == Metric::frechet)
    return frechet_fixed(c, lo, hi, p_first, p_last, eps, trace, witness);
  double worst = hausdorff_fixed(c, lo, hi, p_first, p_last);
  if (worst <= eps + tolerance()) return true;
  if (witness) *witness = hausdorff_worst_interior(c, lo, hi, p_first, p_last);
  return false;
}

Realisation hausdorff_worst_interior(const UncertainCurve& c, size_t lo, size_t hi, Point p_first,
                                     Point p_last) {
  Segment chord{p_first, p_last};
  Realisation real;
  real.reserve(hi - lo + 1);
  real.push_back(p_first);
  for (size_t i = lo + 1; i < hi; ++i) real.push_back(farthest_in_region(c.points[i], chord));
  real.push_back(p_last);
  return real;
}

}  // namespace uncsimp
