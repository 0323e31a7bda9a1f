#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "uncsimp/endpoint_checks.hpp"
#include "uncsimp/regions.hpp"

namespace uncsimp {

// One elementary test inside a shortcut decision. kind is one of: adjacent,
// endpoint_combo, identical_inclusion, containment, tangent_fixed, chord_block,
// cross_edge, shared_region.
struct SubCheck {
  std::string kind;
  bool ok = true;
  long region = -1;  // absolute index of the interior region involved
  long a = -1;       // combo index / line index / pair ordinal
  long b = -1;       // combo index / edge ordinal
};

struct ShortcutCertificate {
  bool valid = true;
  std::vector<SubCheck> checks;
  std::vector<double> trace;  // greedy alignment params of the decisive fixed check
  std::optional<Realisation> witness;  // candidate violating realisation of points[i..j]
  bool witness_verified = false;       // re-checked against the plain curve metric
  bool conservative_extension = false; // collinear-overlap endpoints: sufficient-only test
};

struct ShortcutOptions {
  bool want_trace = false;
  bool want_witness = true;
  size_t witness_samples = 256;
  uint64_t witness_seed = 1;
};

// The realisation stays within eps of its endpoint chord under the metric.
bool realisation_within_chord(const std::vector<Point>& poly, double eps, Metric metric);

// Decide whether the shortcut i -> j is valid for every realisation.
ShortcutCertificate check_shortcut(const UncertainCurve& c, size_t i, size_t j, double eps,
                                   Metric metric, const ShortcutOptions& opt = {});

}  // namespace uncsimp
