#pragma once

#include "uncsimp/shortcuts.hpp"

namespace uncsimp {

struct OracleVerdict {
  bool valid = true;                   // no violating realisation encountered
  bool exhaustive = false;             // every realisation was enumerated
  uint64_t realisations_checked = 0;
  std::optional<Realisation> violation;
};

// Enumerate every realisation of points[i..j] and re-derive the decision from
// the plain curve-to-chord metric. Indecisive curves only; throws when the
// number of realisations exceeds cap.
OracleVerdict exact_shortcut_oracle(const UncertainCurve& c, size_t i, size_t j, double eps,
                                    Metric metric, uint64_t cap = 1000000);

// Seeded sampling over realisations of points[i..j]; reports a violation only
// when a realisation misses the chord beyond twice the tolerance, and can
// never prove validity.
OracleVerdict sampled_shortcut_oracle(const UncertainCurve& c, size_t i, size_t j, double eps,
                                      Metric metric, size_t samples, uint64_t seed);

// Minimum link count over all vertex subsequences whose consecutive shortcuts
// are valid; exponential, for cross-checking the graph search on small curves.
size_t brute_force_min_links(const UncertainCurve& c, double eps, Metric metric,
                             size_t max_points = 12);

}  // namespace uncsimp
