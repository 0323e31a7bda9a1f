#include "uncsimp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uncsimp/io.hpp"
#include "uncsimp/oracle.hpp"

namespace uncsimp {

namespace {

struct Common {
  std::string input;
  std::string output;
  double epsilon = -1.0;     // <0: take from the document
  std::string metric;        // empty: take from the document
  double tol = -1.0;         // <0: env or default
  size_t jobs = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_jobs) {
  cmd->add_option("-i,--input", c.input, "problem JSON file, '-' for stdin")->required();
  cmd->add_option("-o,--output", c.output, "output file, '-' or empty for stdout");
  cmd->add_option("-e,--epsilon", c.epsilon, "override the document's epsilon");
  cmd->add_option("-m,--metric", c.metric, "override the document's metric")
      ->check(CLI::IsMember({"hausdorff", "frechet"}));
  cmd->add_option("-t,--tolerance", c.tol, "comparison tolerance (default 1e-9)");
  if (with_jobs) cmd->add_option("-j,--jobs", c.jobs, "worker threads for the shortcut graph");
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot open output file: " + out);
  f << text;
}

// Resolve tolerance (flag beats UNCSIMP_TOLERANCE beats default), then load
// and validate the problem with overrides applied.
ProblemInput load(const Common& c) {
  double tol = 1e-9;
  if (const char* env = std::getenv("UNCSIMP_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v >= 0.0) tol = v;
  }
  if (c.tol >= 0.0) tol = c.tol;
  set_tolerance(tol);

  ProblemInput in = parse_problem(slurp(c.input));
  if (in.has_tolerance && c.tol < 0.0) set_tolerance(in.tolerance_value);
  if (c.epsilon >= 0.0) in.epsilon = c.epsilon;
  if (c.metric == "hausdorff") in.metric = Metric::hausdorff;
  if (c.metric == "frechet") in.metric = Metric::frechet;
  return in;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    std::cerr << "{\"error\": {\"path\": \"" << e.path << "\", \"message\": \"" << e.what()
              << "\"}}\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"minimum-vertex simplification of uncertain curves, valid for every realisation"};
  app.require_subcommand(1);

  Common cs, cg, co, cr;
  auto* simplify_cmd = app.add_subcommand("simplify", "compute a fewest-vertices simplification");
  add_common(simplify_cmd, cs, true);

  auto* graph_cmd = app.add_subcommand("graph", "emit all valid shortcuts");
  add_common(graph_cmd, cg, true);

  auto* oracle_cmd =
      app.add_subcommand("oracle", "re-check shortcut decisions against enumeration/sampling");
  add_common(oracle_cmd, co, false);
  size_t ofirst = 0, olast = 0, osamples = 4096;
  uint64_t oseed = 1;
  oracle_cmd->add_option("--first", ofirst, "shortcut start vertex (1-based); 0 tests all pairs");
  oracle_cmd->add_option("--last", olast, "shortcut end vertex (1-based); 0 tests all pairs");
  oracle_cmd->add_option("-s,--samples", osamples, "sample count for continuous models");
  oracle_cmd->add_option("--seed", oseed, "sampling seed");

  auto* render_cmd = app.add_subcommand("render", "render the curve and simplification as SVG");
  add_common(render_cmd, cr, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (simplify_cmd->parsed()) {
    return guarded([&]() {
      ProblemInput in = load(cs);
      GraphOptions gopt;
      gopt.jobs = cs.jobs;
      emit(cs.output, simplify_result_json(simplify(in.curve, in.epsilon, in.metric, gopt)));
      return 0;
    });
  }

  if (graph_cmd->parsed()) {
    return guarded([&]() {
      ProblemInput in = load(cg);
      GraphOptions gopt;
      gopt.jobs = cg.jobs;
      emit(cg.output, graph_json(build_graph(in.curve, in.epsilon, in.metric, gopt)));
      return 0;
    });
  }

  if (oracle_cmd->parsed()) {
    return guarded([&]() {
      ProblemInput in = load(co);
      std::vector<std::pair<size_t, size_t>> pairs;
      size_t n = in.curve.size();
      if (ofirst > 0 && olast > 0) {
        if (ofirst >= olast || olast > n)
          throw ValidationError("", "oracle pair out of range");
        pairs.push_back({ofirst - 1, olast - 1});
      } else {
        for (size_t i = 0; i + 1 < n; ++i)
          for (size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
      }
      std::string rows;
      bool breach = false;
      ShortcutOptions sopt;
      sopt.want_witness = false;
      for (auto [i, j] : pairs) {
        bool fast = check_shortcut(in.curve, i, j, in.epsilon, in.metric, sopt).valid;
        OracleVerdict v;
        bool exact = in.curve.model == Model::indecisive &&
                     realisation_count(in.curve, i, j) <= 1000000;
        if (exact)
          v = exact_shortcut_oracle(in.curve, i, j, in.epsilon, in.metric);
        else
          v = sampled_shortcut_oracle(in.curve, i, j, in.epsilon, in.metric, osamples, oseed);
        // A sampling oracle that finds nothing cannot contradict an invalid
        // fast verdict; every other mismatch is a defect.
        bool agree = fast == v.valid || (!fast && !v.exhaustive && v.valid);
        breach = breach || !agree;
        if (!rows.empty()) rows += ",\n";
        rows += oracle_pair_json(i, j, fast, v, agree);
      }
      emit(co.output, oracle_report_json(rows));
      if (breach) {
        std::cerr << "internal error: fast shortcut decision contradicts the oracle\n";
        return 3;
      }
      return 0;
    });
  }

  return guarded([&]() {
    ProblemInput in = load(cr);
    GraphOptions gopt;
    gopt.jobs = cr.jobs;
    SimplifyResult r = simplify(in.curve, in.epsilon, in.metric, gopt);
    emit(cr.output, render_svg(in.curve, r.indices));
    return 0;
  });
}

}  // namespace uncsimp
