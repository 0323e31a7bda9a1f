#include "uncsimp/oracle.hpp"

#include <stdexcept>

namespace uncsimp {

OracleVerdict exact_shortcut_oracle(const UncertainCurve& c, size_t i, size_t j, double eps,
                                    Metric metric, uint64_t cap) {
  if (c.model != Model::indecisive)
    throw std::invalid_argument("exact oracle needs an indecisive curve");
  if (realisation_count(c, i, j) > cap)
    throw std::invalid_argument("too many realisations for exhaustive enumeration");
  OracleVerdict v;
  v.exhaustive = true;
  enumerate_realisations(c, i, j, cap, [&](const Realisation& real) {
    ++v.realisations_checked;
    if (v.valid && !realisation_within_chord(real, eps, metric)) {
      v.valid = false;
      v.violation = real;
    }
  });
  return v;
}

OracleVerdict sampled_shortcut_oracle(const UncertainCurve& c, size_t i, size_t j, double eps,
                                      Metric metric, size_t samples, uint64_t seed) {
  OracleVerdict v;
  for (const Realisation& real : sample_realisations(c, i, j, samples, seed)) {
    ++v.realisations_checked;
    if (v.valid && !realisation_within_chord(real, eps + 2.0 * tolerance(), metric)) {
      v.valid = false;
      v.violation = real;
    }
  }
  return v;
}

size_t brute_force_min_links(const UncertainCurve& c, double eps, Metric metric,
                             size_t max_points) {
  size_t n = c.size();
  if (n < 2) throw std::invalid_argument("curve needs at least 2 points");
  if (n > max_points) throw std::invalid_argument("curve too large for brute force");

  // Lazily memoised shortcut validity.
  std::vector<signed char> memo(n * n, -1);
  ShortcutOptions sopt;
  sopt.want_witness = false;
  auto edge_ok = [&](size_t a, size_t b) {
    signed char& m = memo[a * n + b];
    if (m < 0) m = check_shortcut(c, a, b, eps, metric, sopt).valid ? 1 : 0;
    return m == 1;
  };

  size_t interior = n - 2;
  size_t best = n;  // the full curve is always feasible (adjacent shortcuts)
  for (uint64_t mask = 0; mask < (uint64_t{1} << interior); ++mask) {
    size_t prev = 0, links = 0;
    bool ok = true;
    for (size_t b = 0; b < interior && ok; ++b) {
      if (mask & (uint64_t{1} << b)) {
        ok = edge_ok(prev, b + 1);
        prev = b + 1;
        ++links;
      }
    }
    if (ok) ok = edge_ok(prev, n - 1);
    if (ok) best = std::min(best, links + 1);
  }
  return best;
}

}  // namespace uncsimp
