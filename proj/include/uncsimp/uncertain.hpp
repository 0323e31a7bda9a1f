#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uncsimp/geometry.hpp"

namespace uncsimp {

enum class Model { indecisive, disk, segment, polygon };
enum class Metric { hausdorff, frechet };

struct IndecisiveRegion {
  std::vector<Point> options;
};
struct DiskRegion {
  Point center;
  double radius = 0.0;
};
struct SegmentRegion {
  Point a, b;
};
struct PolygonRegion {
  std::vector<Point> vertices;  // canonical: CCW, lexicographic start
};

using Region = std::variant<IndecisiveRegion, DiskRegion, SegmentRegion, PolygonRegion>;

struct UncertainCurve {
  Model model = Model::indecisive;
  std::vector<Region> points;
  size_t size() const { return points.size(); }
};

// One concrete curve, a point per region.
using Realisation = std::vector<Point>;

struct ValidationIssue {
  std::string path;  // JSON-pointer style location
  std::string message;
};

// Structural validation. Polygon regions are canonicalised in place; returns
// the first problem found, nullopt when well formed.
std::optional<ValidationIssue> validate(UncertainCurve& curve);

// p lies in the region, within tolerance.
bool region_membership(const Region& r, Point p);

// options / endpoints / vertices; not defined for disks.
const std::vector<Point>& region_vertices_ref(const Region& r);
std::vector<Point> region_vertices(const Region& r);

// Number of realisations of points[lo..hi]; finite models only (indecisive).
uint64_t realisation_count(const UncertainCurve& c, size_t lo, size_t hi);

// Visit every realisation of points[lo..hi] in lexicographic option order.
// Returns false (visiting nothing) when the count exceeds cap. Indecisive
// curves only; continuous models throw std::invalid_argument.
bool enumerate_realisations(const UncertainCurve& c, size_t lo, size_t hi, uint64_t cap,
                            const std::function<void(const Realisation&)>& visit);

// Deterministic seeded sample of realisations of points[lo..hi]. The stream
// starts with every all-extreme combination (option/vertex/endpoint choices,
// disks at four compass extremes) when there are at most `count` of them,
// then mixes per-position interior, boundary and extreme draws.
std::vector<Realisation> sample_realisations(const UncertainCurve& c, size_t lo, size_t hi,
                                             size_t count, uint64_t seed);

const char* model_name(Model m);
const char* metric_name(Metric m);

}  // namespace uncsimp
