#pragma once

#include <cmath>
#include <vector>

namespace uncsimp {

// Comparison slack shared by every epsilon test in the library. Overridable
// through the CLI (--tolerance / UNCSIMP_TOLERANCE); tests use the default.
double tolerance();
void set_tolerance(double tau);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
constexpr Point perp(Point p) { return {-p.y, p.x}; }  // rotate +90 degrees

inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool coincident(Point a, Point b) { return dist(a, b) <= tolerance(); }

// (0,0) stays (0,0).
Point normalized(Point p);

// Chord between the first and last vertex of a subcurve, parametrised over
// [1, 2] so that point(1) = a and point(2) = b.
struct Segment {
  Point a, b;
  Point point(double t) const { return a + (t - 1.0) * (b - a); }
  Point dir() const { return b - a; }
  bool degenerate() const { return dist(a, b) <= tolerance(); }
};

struct Interval {
  double lo = 0.0;
  double hi = -1.0;  // lo > hi encodes the empty set
  bool empty() const { return lo > hi; }
};

double point_segment_distance(Point p, Point a, Point b);
double point_segment_distance(Point p, const Segment& s);
Point closest_point_on_segment(Point p, Point a, Point b);

// The parameter set {t in [t_lo, 2] : |s.point(t) - center| <= rho + tolerance()}.
// Always a (possibly empty) interval.
Interval segment_disk_interval(const Segment& s, Point center, double rho, double t_lo);

// Counter-clockwise hull, duplicates and collinear vertices removed, starting
// at the lexicographically smallest vertex. Collinear input degenerates to a
// 2-point hull, a single point to a 1-point hull.
std::vector<Point> convex_hull(std::vector<Point> pts);

double polygon_area(const std::vector<Point>& ring);  // signed, CCW positive
Point centroid(const std::vector<Point>& pts);

// max over a in A, b in B of |a - b|; attained at vertices for convex inputs.
double max_distance_convex(const std::vector<Point>& a, const std::vector<Point>& b);
// The attaining pair, for witness construction.
std::pair<Point, Point> max_distance_convex_pair(const std::vector<Point>& a,
                                                 const std::vector<Point>& b);

struct DiskTangents {
  bool containment = false;  // one disk inside the other (tangents undefined)
  // Outer tangent segments oriented from disk 1 to disk 2; tangent[0] touches
  // on the left of the centre axis, tangent[1] on the right.
  Segment tangent[2];
};
DiskTangents outer_tangents_disks(Point c1, double r1, Point c2, double r2);

struct CircleIntersections {
  bool coincident = false;  // same circle within tolerance
  int count = 0;            // 0, 1 (tangency) or 2
  Point p[2];
};
CircleIntersections circle_circle_intersections(Point c1, double r1, Point c2, double r2);

// Outer tangents between two convex regions given by their vertex sets, valid
// when the interiors do not properly intersect (throws std::invalid_argument
// otherwise; the caller splits such inputs first). Touch points follow the
// near rule: on each tangent line, the vertex of the region extreme towards
// the other region. chain_p / chain_q are the boundary chains facing the gap,
// walked from tangent[0]'s touch point to tangent[1]'s, endpoints inclusive.
struct PolygonTangents {
  Segment tangent[2];  // oriented P -> Q
  std::vector<Point> chain_p;
  std::vector<Point> chain_q;
};
PolygonTangents outer_tangents_polygons(const std::vector<Point>& p,
                                        const std::vector<Point>& q);

}  // namespace uncsimp
