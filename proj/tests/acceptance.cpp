// Acceptance checks for the uncertain-curve simplifier. Each numbered check
// prints exactly one [PASS]/[FAIL] line; the exit code is the failure count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "uncsimp/oracle.hpp"
#include "uncsimp/simplify.hpp"

using namespace uncsimp;

namespace {

// Pinned corpus parameters.
constexpr uint64_t kSeedIndecisive = 11001;
constexpr uint64_t kSeedDisk = 12001;
constexpr uint64_t kSeedSegment = 12002;
constexpr uint64_t kSeedPolygon = 12003;
constexpr uint64_t kSeedOptimality = 13001;
constexpr uint64_t kSeedScaling = 14001;
constexpr size_t kCorpusSize = 1000;
constexpr size_t kSamplesPerQuery = 1000;
const double kEpsChoices[4] = {0.5, 1.0, 2.0, 4.0};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

double uni(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

struct Instance {
  UncertainCurve curve;
  double eps = 1.0;
  Metric metric = Metric::hausdorff;
};

std::vector<std::pair<size_t, size_t>> query_pairs(size_t n) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i + 2 < n; ++i)
    for (size_t j = i + 2; j < n; ++j) out.push_back({i, j});
  return out;
}

// Instances with finitely many candidate locations, integer grid coordinates.
std::vector<Instance> indecisive_corpus() {
  std::mt19937_64 g(kSeedIndecisive);
  std::vector<Instance> out;
  while (out.size() < kCorpusSize) {
    Instance in;
    in.curve.model = Model::indecisive;
    size_t n = 3 + g() % 4;
    for (size_t i = 0; i < n; ++i) {
      IndecisiveRegion r;
      size_t k = 1 + g() % 3;
      for (size_t t = 0; t < k; ++t)
        r.options.push_back({double(g() % 11), double(g() % 11)});
      in.curve.points.push_back(std::move(r));
    }
    in.eps = kEpsChoices[g() % 4];
    in.metric = (g() & 1) ? Metric::hausdorff : Metric::frechet;
    if (validate(in.curve)) continue;
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<Instance> continuous_corpus(Model model, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<Instance> out;
  while (out.size() < kCorpusSize) {
    Instance in;
    in.curve.model = model;
    size_t n = 3 + g() % 4;
    for (size_t i = 0; i < n; ++i) {
      double bx = 10.0 * double(i) / double(n - 1) + uni(g, -1.0, 1.0);
      double by = uni(g, 0.0, 4.0);
      switch (model) {
        case Model::disk:
          in.curve.points.push_back(DiskRegion{{bx, by}, uni(g, 0.0, 1.5)});
          break;
        case Model::segment:
          in.curve.points.push_back(
              SegmentRegion{{bx + uni(g, -1, 1), by + uni(g, -1, 1)},
                            {bx + uni(g, -1, 1), by + uni(g, -1, 1)}});
          break;
        case Model::polygon: {
          PolygonRegion r;
          size_t k = 3 + g() % 4;  // up to 6 vertices
          for (size_t t = 0; t < k; ++t)
            r.vertices.push_back({bx + uni(g, -1, 1), by + uni(g, -1, 1)});
          in.curve.points.push_back(std::move(r));
          break;
        }
        case Model::indecisive: break;
      }
    }
    in.eps = kEpsChoices[g() % 4];
    in.metric = (g() & 1) ? Metric::hausdorff : Metric::frechet;
    if (validate(in.curve)) continue;
    out.push_back(std::move(in));
  }
  return out;
}

ShortcutOptions fast_opts() {
  ShortcutOptions o;
  o.want_witness = false;
  return o;
}

bool check1(const std::vector<Instance>& corpus) {
  Timer timer;
  size_t queries = 0, mismatches = 0;
  for (const Instance& in : corpus) {
    for (auto [i, j] : query_pairs(in.curve.size())) {
      for (Metric metric : {Metric::hausdorff, Metric::frechet}) {
        bool fast = check_shortcut(in.curve, i, j, in.eps, metric, fast_opts()).valid;
        bool slow = exact_shortcut_oracle(in.curve, i, j, in.eps, metric).valid;
        ++queries;
        mismatches += fast != slow;
      }
    }
  }
  double secs = timer.seconds();
  bool ok = mismatches == 0 && secs < 60.0;
  std::printf("[%s] 1 finite-candidate decisions match exhaustive enumeration: "
              "%zu/%zu queries agree under both metrics, %.1fs\n",
              ok ? "PASS" : "FAIL", queries - mismatches, queries, secs);
  return ok;
}

bool check2(const std::vector<Instance>* corpora) {
  Timer timer;
  size_t accepted = 0, violations = 0;
  uint64_t qid = 0;
  for (int m = 0; m < 3; ++m) {
    for (const Instance& in : corpora[m]) {
      for (auto [i, j] : query_pairs(in.curve.size())) {
        ++qid;
        if (!check_shortcut(in.curve, i, j, in.eps, in.metric, fast_opts()).valid) continue;
        ++accepted;
        for (const Realisation& r :
             sample_realisations(in.curve, i, j, kSamplesPerQuery, qid)) {
          if (!realisation_within_chord(r, in.eps + 2.0 * tolerance(), in.metric))
            ++violations;
        }
      }
    }
  }
  double secs = timer.seconds();
  bool ok = violations == 0 && secs < 300.0;
  std::printf("[%s] 2 accepted shortcuts hold on sampled realisations: "
              "%zu accepted queries x %zu samples, %zu violations, %.1fs\n",
              ok ? "PASS" : "FAIL", accepted, kSamplesPerQuery, violations, secs);
  return ok;
}

bool check3(const std::vector<Instance>& disks) {
  size_t rejected = 0, reached = 0;
  for (const Instance& in : disks) {
    for (auto [i, j] : query_pairs(in.curve.size())) {
      ShortcutCertificate cert = check_shortcut(in.curve, i, j, in.eps, Metric::hausdorff);
      if (cert.valid) continue;
      ++rejected;
      if (cert.witness.has_value() &&
          hausdorff_to_chord(*cert.witness) > in.eps - 10.0 * tolerance())
        ++reached;
    }
  }
  bool ok = reached == rejected;
  std::printf("[%s] 3 rejected disk shortcuts carry a near-threshold witness: "
              "%zu/%zu witnesses exceed eps - 10*tol\n",
              ok ? "PASS" : "FAIL", reached, rejected);
  return ok;
}

bool check4(const std::vector<Instance>& indecisive, const std::vector<Instance>* corpora) {
  size_t frechet_valid = 0, violations = 0;
  auto run = [&](const Instance& in) {
    for (auto [i, j] : query_pairs(in.curve.size())) {
      if (!check_shortcut(in.curve, i, j, in.eps, Metric::frechet, fast_opts()).valid) continue;
      ++frechet_valid;
      if (!check_shortcut(in.curve, i, j, in.eps, Metric::hausdorff, fast_opts()).valid)
        ++violations;
    }
  };
  for (const Instance& in : indecisive) run(in);
  for (int m = 0; m < 3; ++m)
    for (const Instance& in : corpora[m]) run(in);
  bool ok = violations == 0;
  std::printf("[%s] 4 frechet-valid shortcuts are hausdorff-valid: "
              "%zu frechet-valid queries, %zu exceptions\n",
              ok ? "PASS" : "FAIL", frechet_valid, violations);
  return ok;
}

bool check5() {
  Timer timer;
  std::mt19937_64 g(kSeedOptimality);
  size_t instances = 0, matches = 0;
  for (Model model : {Model::indecisive, Model::disk, Model::segment, Model::polygon}) {
    for (int rep = 0; rep < 125; ++rep) {
      UncertainCurve c;
      for (;;) {
        c = UncertainCurve{};
        c.model = model;
        size_t n = 4 + g() % 5;
        for (size_t i = 0; i < n; ++i) {
          double bx = 8.0 * double(i) / double(n - 1) + uni(g, -0.5, 0.5);
          double by = uni(g, 0.0, 3.0);
          switch (model) {
            case Model::indecisive: {
              IndecisiveRegion r;
              size_t k = 1 + g() % 3;
              for (size_t t = 0; t < k; ++t)
                r.options.push_back({bx + uni(g, -0.5, 0.5), by + uni(g, -0.5, 0.5)});
              c.points.push_back(std::move(r));
              break;
            }
            case Model::disk:
              c.points.push_back(DiskRegion{{bx, by}, uni(g, 0.0, 0.8)});
              break;
            case Model::segment:
              c.points.push_back(SegmentRegion{{bx + uni(g, -0.7, 0.7), by + uni(g, -0.7, 0.7)},
                                               {bx + uni(g, -0.7, 0.7), by + uni(g, -0.7, 0.7)}});
              break;
            case Model::polygon: {
              PolygonRegion r;
              for (int t = 0; t < 3; ++t)
                r.vertices.push_back({bx + uni(g, -0.7, 0.7), by + uni(g, -0.7, 0.7)});
              c.points.push_back(std::move(r));
              break;
            }
          }
        }
        if (!validate(c)) break;
      }
      double eps = kEpsChoices[g() % 4];
      Metric metric = (g() & 1) ? Metric::hausdorff : Metric::frechet;
      ++instances;
      matches += simplify(c, eps, metric).links == brute_force_min_links(c, eps, metric);
    }
  }
  double secs = timer.seconds();
  bool ok = matches == instances && secs < 300.0;
  std::printf("[%s] 5 graph search matches the brute-force minimum: %zu/%zu, %.1fs\n",
              ok ? "PASS" : "FAIL", matches, instances, secs);
  return ok;
}

bool check6(const std::vector<Instance>& indecisive, const std::vector<Instance>* corpora) {
  size_t validity_breaks = 0, link_breaks = 0, instances = 0;
  auto run = [&](const Instance& in, Metric metric) {
    ++instances;
    for (auto [i, j] : query_pairs(in.curve.size())) {
      bool at1 = check_shortcut(in.curve, i, j, in.eps, metric, fast_opts()).valid;
      bool at2 = check_shortcut(in.curve, i, j, 2.0 * in.eps, metric, fast_opts()).valid;
      validity_breaks += at1 && !at2;
    }
    size_t l1 = simplify(in.curve, in.eps, metric).links;
    size_t l2 = simplify(in.curve, 2.0 * in.eps, metric).links;
    link_breaks += l2 > l1;
  };
  for (const Instance& in : indecisive) {
    run(in, Metric::hausdorff);
    run(in, Metric::frechet);
  }
  for (int m = 0; m < 3; ++m)
    for (const Instance& in : corpora[m]) run(in, in.metric);
  bool ok = validity_breaks == 0 && link_breaks == 0;
  std::printf("[%s] 6 doubling epsilon never invalidates: %zu instance checks, "
              "%zu validity breaks, %zu link-count breaks\n",
              ok ? "PASS" : "FAIL", instances, validity_breaks, link_breaks);
  return ok;
}

UncertainCurve scaling_curve(size_t n) {
  std::mt19937_64 g(kSeedScaling);
  UncertainCurve c;
  c.model = Model::disk;
  for (size_t i = 0; i < n; ++i)
    c.points.push_back(DiskRegion{{0.35 * double(i), uni(g, -0.1, 0.1)}, uni(g, 0.05, 0.3)});
  return c;
}

double median_simplify_seconds(const UncertainCurve& c, double eps) {
  std::vector<double> runs;
  for (int r = 0; r < 5; ++r) {
    Timer t;
    SimplifyResult res = simplify(c, eps, Metric::frechet);
    runs.push_back(t.seconds());
    if (res.links == 0) std::printf("unexpected\n");  // keep the call observable
  }
  std::sort(runs.begin(), runs.end());
  return runs[2];
}

bool check7() {
  double t100 = median_simplify_seconds(scaling_curve(100), 3.0);
  double t200 = median_simplify_seconds(scaling_curve(200), 3.0);
  bool ok = t200 <= 12.0 * t100 && t200 < 30.0;
  std::printf("[%s] 7 disk simplification scales near-cubically: "
              "median %.3fs at n=100, %.3fs at n=200 (ratio %.1fx, limit 12x)\n",
              ok ? "PASS" : "FAIL", t100, t200, t100 > 0 ? t200 / t100 : 0.0);
  return ok;
}

// Independent decision for a 4-vertex polyline against its endpoint chord:
// dense monotone scan over the two alignment positions.
bool grid_scan_frechet4(const std::vector<Point>& poly, double eps) {
  Point a = poly.front(), b = poly.back();
  constexpr int kGrid = 20000;
  std::vector<char> f2(kGrid + 1);
  bool suffix = false;
  std::vector<char> suffix_ok(kGrid + 2, 0);
  for (int t = kGrid; t >= 0; --t) {
    Point q = a + (double(t) / kGrid) * (b - a);
    suffix = suffix || dist(q, poly[2]) <= eps;
    suffix_ok[t] = suffix;
  }
  for (int t = 0; t <= kGrid; ++t) {
    Point q = a + (double(t) / kGrid) * (b - a);
    if (dist(q, poly[1]) <= eps && suffix_ok[t]) return true;
  }
  return false;
}

bool check8() {
  std::vector<Point> out_of_order{{0, 0}, {3, 0.5}, {1, 0.5}, {4, 0}};
  std::vector<Point> in_order{{0, 0}, {1, 0.5}, {3, 0.5}, {4, 0}};
  bool a_fast = frechet_to_chord(out_of_order, 1.0);
  bool b_fast = frechet_to_chord(in_order, 1.0);
  bool a_grid = grid_scan_frechet4(out_of_order, 1.0);
  bool b_grid = grid_scan_frechet4(in_order, 1.0);

  UncertainCurve ca, cb;
  ca.model = cb.model = Model::indecisive;
  for (Point p : out_of_order) ca.points.push_back(IndecisiveRegion{{p}});
  for (Point p : in_order) cb.points.push_back(IndecisiveRegion{{p}});
  bool a_shortcut = check_shortcut(ca, 0, 3, 1.0, Metric::frechet).valid;
  bool b_shortcut = check_shortcut(cb, 0, 3, 1.0, Metric::frechet).valid;

  bool ok = !a_fast && b_fast && !a_grid && b_grid && !a_shortcut && b_shortcut;
  std::printf("[%s] 8 alignment-order regression: out-of-order rejected (%s, scan %s), "
              "ordered accepted (%s, scan %s)\n",
              ok ? "PASS" : "FAIL", a_fast ? "accepted" : "rejected",
              a_grid ? "accepted" : "rejected", b_fast ? "accepted" : "rejected",
              b_grid ? "accepted" : "rejected");
  return ok;
}

}  // namespace

int main() {
  std::vector<Instance> indecisive = indecisive_corpus();
  std::vector<Instance> corpora[3] = {continuous_corpus(Model::disk, kSeedDisk),
                                      continuous_corpus(Model::segment, kSeedSegment),
                                      continuous_corpus(Model::polygon, kSeedPolygon)};
  int failures = 0;
  failures += !check1(indecisive);
  failures += !check2(corpora);
  failures += !check3(corpora[0]);
  failures += !check4(indecisive, corpora);
  failures += !check5();
  failures += !check6(indecisive, corpora);
  failures += !check7();
  failures += !check8();
  return failures;
}
