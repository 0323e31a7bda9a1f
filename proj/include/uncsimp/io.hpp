#pragma once

#include <stdexcept>
#include <string>

#include "uncsimp/oracle.hpp"
#include "uncsimp/shortcuts.hpp"
#include "uncsimp/simplify.hpp"

namespace uncsimp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  std::string path;  // JSON pointer to the offending member
  ValidationError(std::string p, const std::string& msg)
      : std::runtime_error(msg), path(std::move(p)) {}
};

struct ProblemInput {
  UncertainCurve curve;
  double epsilon = 0.0;
  Metric metric = Metric::hausdorff;
  bool has_tolerance = false;
  double tolerance_value = 0.0;
};

// Parse and validate a problem document:
//   {"model": "...", "epsilon": e, "metric": "...", "points": [...],
//    "tolerance": t?}
// Point schema per model: indecisive {"options": [[x,y],...]},
// disk {"c": [x,y], "r": r}, segment {"a": [x,y], "b": [x,y]},
// polygon {"vertices": [[x,y],...]}.
ProblemInput parse_problem(const std::string& text);

std::string simplify_result_json(const SimplifyResult& r);
std::string graph_json(const ShortcutGraph& g);
std::string certificate_json(const ShortcutCertificate& cert, size_t i, size_t j);
std::string oracle_report_json(const std::string& report_items);  // wraps a built array

// Pre-rendered JSON for one oracle/fast comparison row.
std::string oracle_pair_json(size_t i, size_t j, bool fast_valid, const OracleVerdict& v,
                             bool agree);

// Static SVG: one shape per uncertainty region plus the chosen polyline
// through region reference points.
std::string render_svg(const UncertainCurve& c, const std::vector<size_t>& path);

Point region_reference(const Region& r);

}  // namespace uncsimp
