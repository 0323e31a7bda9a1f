#pragma once

#include "uncsimp/uncertain.hpp"

namespace uncsimp {

// Hausdorff distance from a polyline to the chord between its endpoints.
double hausdorff_to_chord(const std::vector<Point>& poly);

struct GreedyTrace {
  std::vector<double> s;   // alignment parameter reached after each interior vertex
  size_t fail_index = 0;   // absolute index of the region/vertex with an empty window
};

// Monotone matching of poly onto its endpoint chord within eps; greedy,
// keeping for each vertex the earliest reachable chord parameter.
bool frechet_to_chord(const std::vector<Point>& poly, double eps, GreedyTrace* trace = nullptr);

// Fixed-endpoint decisions for the interior regions points[lo+1..hi-1]
// against the chord p_first -> p_last. Hausdorff variants return the attained
// maximum over realisations; callers decide with value <= eps + tolerance().
double hausdorff_fixed(const UncertainCurve& c, size_t lo, size_t hi, Point p_first, Point p_last);

// Frechet variants decide directly. On failure, witness (when non-null)
// receives a full violating realisation of points[lo..hi] with the given
// endpoints; exact for vertex-based models, best-effort for disks.
bool frechet_fixed(const UncertainCurve& c, size_t lo, size_t hi, Point p_first, Point p_last,
                   double eps, GreedyTrace* trace = nullptr, Realisation* witness = nullptr);

bool fixed_endpoint_check(const UncertainCurve& c, size_t lo, size_t hi, Point p_first,
                          Point p_last, double eps, Metric metric,
                          GreedyTrace* trace = nullptr, Realisation* witness = nullptr);

// Farthest-from-chord realisation of points[lo..hi] with the endpoints pinned;
// exact maximiser of the Hausdorff distance to the chord.
Realisation hausdorff_worst_interior(const UncertainCurve& c, size_t lo, size_t hi, Point p_first,
                                     Point p_last);

}  // namespace uncsimp
