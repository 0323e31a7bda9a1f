// Python module mirroring the CLI surface: problems in, JSON/SVG text out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uncsimp/cli.hpp"
#include "uncsimp/io.hpp"

namespace py = pybind11;
using namespace uncsimp;

namespace {

ProblemInput load_problem(const std::string& text, double epsilon, const std::string& metric,
                          double tol) {
  set_tolerance(tol >= 0.0 ? tol : 1e-9);
  ProblemInput in = parse_problem(text);
  if (in.has_tolerance && tol < 0.0) set_tolerance(in.tolerance_value);
  if (epsilon >= 0.0) in.epsilon = epsilon;
  if (metric == "hausdorff") in.metric = Metric::hausdorff;
  if (metric == "frechet") in.metric = Metric::frechet;
  return in;
}

std::vector<Point> to_points(const std::vector<std::pair<double, double>>& xs) {
  std::vector<Point> ps;
  ps.reserve(xs.size());
  for (auto [x, y] : xs) ps.push_back({x, y});
  return ps;
}

}  // namespace

PYBIND11_MODULE(uncsimp, m) {
  m.doc() = "minimum-vertex simplification of uncertain curves, valid for every realisation";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, (e.path + ": " + std::string(e.what())).c_str());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "simplify",
      [](const std::string& problem, double epsilon, const std::string& metric, double tol,
         size_t jobs) {
        ProblemInput in = load_problem(problem, epsilon, metric, tol);
        GraphOptions opt;
        opt.jobs = jobs;
        return simplify_result_json(simplify(in.curve, in.epsilon, in.metric, opt));
      },
      py::arg("problem"), py::arg("epsilon") = -1.0, py::arg("metric") = "",
      py::arg("tolerance") = -1.0, py::arg("jobs") = size_t{1},
      "Fewest-vertices simplification of a problem document; returns a JSON result\n"
      "with 1-based vertex indices. epsilon/metric/tolerance override the document.");

  m.def(
      "graph",
      [](const std::string& problem, double epsilon, const std::string& metric, double tol,
         size_t jobs) {
        ProblemInput in = load_problem(problem, epsilon, metric, tol);
        GraphOptions opt;
        opt.jobs = jobs;
        return graph_json(build_graph(in.curve, in.epsilon, in.metric, opt));
      },
      py::arg("problem"), py::arg("epsilon") = -1.0, py::arg("metric") = "",
      py::arg("tolerance") = -1.0, py::arg("jobs") = size_t{1},
      "All valid shortcuts of a problem document as a JSON adjacency dump.");

  m.def(
      "certificate",
      [](const std::string& problem, size_t first, size_t last, bool want_trace,
         bool want_witness, double epsilon, const std::string& metric, double tol) {
        ProblemInput in = load_problem(problem, epsilon, metric, tol);
        if (first < 1 || last <= first || last > in.curve.size())
          throw ValidationError("", "certificate pair out of range");
        ShortcutOptions opt;
        opt.want_trace = want_trace;
        opt.want_witness = want_witness;
        ShortcutCertificate cert =
            check_shortcut(in.curve, first - 1, last - 1, in.epsilon, in.metric, opt);
        return certificate_json(cert, first - 1, last - 1);
      },
      py::arg("problem"), py::arg("first"), py::arg("last"), py::arg("want_trace") = false,
      py::arg("want_witness") = true, py::arg("epsilon") = -1.0, py::arg("metric") = "",
      py::arg("tolerance") = -1.0,
      "Decision certificate for one shortcut (1-based endpoints): the sub-checks\n"
      "performed and, when invalid, a worst-case witness realisation.");

  m.def(
      "oracle",
      [](const std::string& problem, size_t first, size_t last, size_t samples, uint64_t seed,
         double epsilon, const std::string& metric, double tol) {
        ProblemInput in = load_problem(problem, epsilon, metric, tol);
        std::vector<std::pair<size_t, size_t>> pairs;
        size_t n = in.curve.size();
        if (first > 0 && last > 0) {
          if (first >= last || last > n) throw ValidationError("", "oracle pair out of range");
          pairs.push_back({first - 1, last - 1});
        } else {
          for (size_t i = 0; i + 1 < n; ++i)
            for (size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
        }
        std::string rows;
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
            v = sampled_shortcut_oracle(in.curve, i, j, in.epsilon, in.metric, samples, seed);
          bool agree = fast == v.valid || (!fast && !v.exhaustive && v.valid);
          if (!rows.empty()) rows += ",\n";
          rows += oracle_pair_json(i, j, fast, v, agree);
        }
        return oracle_report_json(rows);
      },
      py::arg("problem"), py::arg("first") = size_t{0}, py::arg("last") = size_t{0},
      py::arg("samples") = size_t{4096}, py::arg("seed") = uint64_t{1},
      py::arg("epsilon") = -1.0, py::arg("metric") = "", py::arg("tolerance") = -1.0,
      "Re-check shortcut decisions against enumeration (finite models) or seeded\n"
      "sampling; returns a JSON report with one row per tested pair.");

  m.def(
      "render",
      [](const std::string& problem, double epsilon, const std::string& metric, double tol) {
        ProblemInput in = load_problem(problem, epsilon, metric, tol);
        SimplifyResult res = simplify(in.curve, in.epsilon, in.metric);
        return render_svg(in.curve, res.indices);
      },
      py::arg("problem"), py::arg("epsilon") = -1.0, py::arg("metric") = "",
      py::arg("tolerance") = -1.0,
      "SVG drawing of the uncertainty regions and the simplified polyline.");

  m.def(
      "hausdorff_to_chord",
      [](const std::vector<std::pair<double, double>>& poly) {
        return hausdorff_to_chord(to_points(poly));
      },
      py::arg("points"),
      "Hausdorff distance from a fixed polyline to its endpoint chord.");

  m.def(
      "frechet_to_chord",
      [](const std::vector<std::pair<double, double>>& poly, double eps) {
        return frechet_to_chord(to_points(poly), eps);
      },
      py::arg("points"), py::arg("epsilon"),
      "Whether a fixed polyline stays within epsilon Frechet distance of its chord.");

  m.def("set_tolerance", &set_tolerance, py::arg("tau"),
        "Set the global comparison tolerance.");
  m.def("tolerance", &tolerance, "Current global comparison tolerance.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& argv) {
        std::vector<const char*> raw{"uncsimp"};
        for (const std::string& a : argv) raw.push_back(a.c_str());
        return run_cli(static_cast<int>(raw.size()), raw.data());
      },
      py::arg("argv"), "Invoke the command-line interface; returns its exit code.");
}
