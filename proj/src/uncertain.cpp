#include "uncsimp/uncertain.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace uncsimp {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::string at(size_t i) { return "/points/" + std::to_string(i); }

// Distinct vertex count under tolerance, greedy left to right.
size_t distinct_count(const std::vector<Point>& v) {
  std::vector<Point> kept;
  for (Point p : v) {
    bool dup = false;
    for (Point q : kept) dup = dup || coincident(p, q);
    if (!dup) kept.push_back(p);
  }
  return kept.size();
}

}  // namespace

std::optional<ValidationIssue> validate(UncertainCurve& curve) {
  if (curve.points.size() < 2)
    return ValidationIssue{"/points", "curve needs at least 2 uncertain points"};
  for (size_t i = 0; i < curve.points.size(); ++i) {
    Region& r = curve.points[i];
    if (static_cast<size_t>(r.index()) != static_cast<size_t>(curve.model))
      return ValidationIssue{at(i), "region kind does not match the curve model"};
    if (auto* ind = std::get_if<IndecisiveRegion>(&r)) {
      if (ind->options.empty()) return ValidationIssue{at(i) + "/options", "needs at least one option"};
      for (size_t j = 0; j < ind->options.size(); ++j)
        if (!finite(ind->options[j]))
          return ValidationIssue{at(i) + "/options/" + std::to_string(j), "coordinates must be finite"};
    } else if (auto* d = std::get_if<DiskRegion>(&r)) {
      if (!finite(d->center)) return ValidationIssue{at(i) + "/c", "coordinates must be finite"};
      if (!std::isfinite(d->radius) || d->radius < 0.0)
        return ValidationIssue{at(i) + "/r", "radius must be finite and non-negative"};
    } else if (auto* s = std::get_if<SegmentRegion>(&r)) {
      if (!finite(s->a)) return ValidationIssue{at(i) + "/a", "coordinates must be finite"};
      if (!finite(s->b)) return ValidationIssue{at(i) + "/b", "coordinates must be finite"};
    } else if (auto* g = std::get_if<PolygonRegion>(&r)) {
      if (g->vertices.empty())
        return ValidationIssue{at(i) + "/vertices", "needs at least one vertex"};
      for (size_t j = 0; j < g->vertices.size(); ++j)
        if (!finite(g->vertices[j]))
          return ValidationIssue{at(i) + "/vertices/" + std::to_string(j), "coordinates must be finite"};
      std::vector<Point> canon = convex_hull(g->vertices);
      if (canon.size() < distinct_count(g->vertices))
        return ValidationIssue{at(i) + "/vertices", "vertices must be in strictly convex position"};
      g->vertices = std::move(canon);
    }
  }
  return std::nullopt;
}

bool region_membership(const Region& r, Point p) {
  if (auto* ind = std::get_if<IndecisiveRegion>(&r)) {
    for (Point q : ind->options)
      if (coincident(p, q)) return true;
    return false;
  }
  if (auto* d = std::get_if<DiskRegion>(&r)) return dist(p, d->center) <= d->radius + tolerance();
  if (auto* s = std::get_if<SegmentRegion>(&r))
    return point_segment_distance(p, s->a, s->b) <= tolerance();
  const auto& v = std::get<PolygonRegion>(r).vertices;
  if (v.size() == 1) return coincident(p, v[0]);
  if (v.size() == 2) return point_segment_distance(p, v[0], v[1]) <= tolerance();
  for (size_t i = 0; i < v.size(); ++i) {
    Point a = v[i], b = v[(i + 1) % v.size()];
    Point e = b - a;
    if (cross(e, p - a) < -tolerance() * norm(e)) return false;
  }
  return true;
}

const std::vector<Point>& region_vertices_ref(const Region& r) {
  if (auto* ind = std::get_if<IndecisiveRegion>(&r)) return ind->options;
  if (auto* g = std::get_if<PolygonRegion>(&r)) return g->vertices;
  throw std::invalid_argument("region has no vertex list");
}

std::vector<Point> region_vertices(const Region& r) {
  if (auto* s = std::get_if<SegmentRegion>(&r)) {
    if (coincident(s->a, s->b)) return {s->a};
    return {s->a, s->b};
  }
  return region_vertices_ref(r);
}

uint64_t realisation_count(const UncertainCurve& c, size_t lo, size_t hi) {
  uint64_t total = 1;
  for (size_t i = lo; i <= hi && i < c.size(); ++i) {
    auto* ind = std::get_if<IndecisiveRegion>(&c.points[i]);
    if (!ind) throw std::invalid_argument("realisation_count needs an indecisive curve");
    uint64_t k = ind->options.size();
    if (k != 0 && total > UINT64_MAX / k) return UINT64_MAX;
    total *= k;
  }
  return total;
}

bool enumerate_realisations(const UncertainCurve& c, size_t lo, size_t hi, uint64_t cap,
                            const std::function<void(const Realisation&)>& visit) {
  if (lo > hi || hi >= c.size()) throw std::invalid_argument("bad enumeration range");
  if (realisation_count(c, lo, hi) > cap) return false;
  size_t n = hi - lo + 1;
  std::vector<size_t> pick(n, 0);
  Realisation real(n);
  auto options = [&](size_t i) -> const std::vector<Point>& {
    return std::get<IndecisiveRegion>(c.points[lo + i]).options;
  };
  for (size_t i = 0; i < n; ++i) real[i] = options(i)[0];
  for (;;) {
    visit(real);
    size_t i = n;
    while (i > 0) {
      --i;
      if (pick[i] + 1 < options(i).size()) {
        ++pick[i];
        real[i] = options(i)[pick[i]];
        break;
      }
      pick[i] = 0;
      real[i] = options(i)[0];
      if (i == 0) return true;
    }
    if (n == 0) return true;
  }
}

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  double uniform() { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
  size_t below(size_t n) { return n ? static_cast<size_t>(g() % n) : 0; }
};

std::vector<Point> extreme_points(const Region& r) {
  if (auto* d = std::get_if<DiskRegion>(&r)) {
    if (d->radius <= 0.0) return {d->center};
    Point c = d->center;
    double rr = d->radius;
    return {{c.x + rr, c.y}, {c.x - rr, c.y}, {c.x, c.y + rr}, {c.x, c.y - rr}};
  }
  return region_vertices(r);
}

Point random_point(const Region& r, Rng& rng) {
  int mode = static_cast<int>(rng.below(3));
  if (auto* ind = std::get_if<IndecisiveRegion>(&r)) return ind->options[rng.below(ind->options.size())];
  if (auto* d = std::get_if<DiskRegion>(&r)) {
    double th = rng.uniform() * 6.283185307179586;
    double rad = d->radius * (mode == 0 ? std::sqrt(rng.uniform()) : 1.0);
    if (mode == 2) rad = 0.0;  // center
    return d->center + rad * Point{std::cos(th), std::sin(th)};
  }
  if (auto* s = std::get_if<SegmentRegion>(&r)) {
    double t = mode == 1 ? (rng.below(2) ? 1.0 : 0.0) : rng.uniform();
    return s->a + t * (s->b - s->a);
  }
  const auto& v = std::get<PolygonRegion>(r).vertices;
  if (v.size() == 1 || mode == 2) return v[rng.below(v.size())];
  if (v.size() == 2 || mode == 1) {
    size_t i = rng.below(v.size() == 2 ? 1 : v.size());
    Point a = v[i], b = v[(i + 1) % v.size()];
    return a + rng.uniform() * (b - a);
  }
  // interior: area-weighted fan triangle, then standard triangle sampling
  std::vector<double> acc;
  double total = 0.0;
  for (size_t i = 1; i + 1 < v.size(); ++i) {
    total += 0.5 * std::abs(cross(v[i] - v[0], v[i + 1] - v[0]));
    acc.push_back(total);
  }
  if (total <= 0.0) return v[rng.below(v.size())];
  double pickv = rng.uniform() * total;
  size_t tri = std::lower_bound(acc.begin(), acc.end(), pickv) - acc.begin();
  tri = std::min(tri, acc.size() - 1);
  Point a = v[0], b = v[tri + 1], cpt = v[tri + 2];
  double su = std::sqrt(rng.uniform()), pv = rng.uniform();
  return (1.0 - su) * a + (su * (1.0 - pv)) * b + (su * pv) * cpt;
}

}  // namespace

std::vector<Realisation> sample_realisations(const UncertainCurve& c, size_t lo, size_t hi,
                                             size_t count, uint64_t seed) {
  if (lo > hi || hi >= c.size()) throw std::invalid_argument("bad sampling range");
  size_t n = hi - lo + 1;
  std::vector<Realisation> out;
  if (count == 0) return out;

  std::vector<std::vector<Point>> ext(n);
  uint64_t combos = 1;
  bool overflow = false;
  for (size_t i = 0; i < n; ++i) {
    ext[i] = extreme_points(c.points[lo + i]);
    if (combos > count / std::max<size_t>(ext[i].size(), 1) + 1) overflow = true;
    combos *= ext[i].size();
    if (combos > count) overflow = true;
  }
  if (!overflow && combos <= count) {
    std::vector<size_t> pick(n, 0);
    for (uint64_t k = 0; k < combos; ++k) {
      Realisation real(n);
      for (size_t i = 0; i < n; ++i) real[i] = ext[i][pick[i]];
      out.push_back(std::move(real));
      for (size_t i = n; i-- > 0;) {
        if (++pick[i] < ext[i].size()) break;
        pick[i] = 0;
      }
    }
  }

  Rng rng(seed * 0x9e3779b97f4a7c15ULL + lo * 1000003ULL + hi * 31ULL + 0x9e3779b9ULL);
  while (out.size() < count) {
    Realisation real(n);
    for (size_t i = 0; i < n; ++i) real[i] = random_point(c.points[lo + i], rng);
    out.push_back(std::move(real));
  }
  return out;
}

const char* model_name(Model m) {
  switch (m) {
    case Model::indecisive: return "indecisive";
    case Model::disk: return "disk";
    case Model::segment: return "segment";
    case Model::polygon: return "polygon";
  }
  return "?";
}

const char* metric_name(Metric m) {
  return m == Metric::hausdorff ? "hausdorff" : "frechet";
}

}  // namespace uncsimp
