#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uncsimp/uncertain.hpp"

namespace uncsimp {

// One boundary line of the strip spanned by the outer tangents of the first
// and last region. dir is unit length, oriented first -> last; params are
// signed positions along dir.
struct StripLine {
  Point origin;
  Point dir;
  double inner = 1.0;  // sign making signed_inside positive toward the strip
  double param(Point p) const { return dot(p - origin, dir); }
  double signed_inside(Point p) const { return inner * cross(dir, p - origin); }
};

// Crossing parameters of one circle with both strip lines; lo/hi are the
// near/far crossings per line (tangency collapses them).
struct StripCrossings {
  Point center;
  double radius = 0.0;
  double lo[2] = {0.0, 0.0};
  double hi[2] = {0.0, 0.0};
  Point plo[2], phi[2];
};

struct DiskStrip {
  enum class Kind { proper, identical, containment } kind = Kind::proper;
  bool small_first = false;  // containment: the first disk is the contained one
  Segment tangent[2];        // oriented first -> last; [0] left of the axis, [1] right
  StripLine line[2];
  StripCrossings first, last;  // endpoint disks, tangency params on both lines
};

// Strip between the first and last uncertainty disk; identical / containment
// configurations are flagged instead of building tangent lines.
DiskStrip build_disk_strip(const DiskRegion& a, const DiskRegion& b);

// Crossings of the circle around `center` with both strip lines; nullopt when
// it misses one of them beyond tolerance. A slightly negative radius (within
// tolerance) is clamped to zero.
std::optional<StripCrossings> strip_crossings(Point center, double radius, const DiskStrip& strip);

// p lies strictly between both strip lines (beyond tolerance).
bool strictly_inside_strip(Point p, const DiskStrip& strip);

// p (a point of the circle) lies on the far arc, the boundary piece between
// the two far crossings, away from the first region. Near arc mirrors it.
bool on_far_arc(const StripCrossings& x, Point p, const DiskStrip& strip);
bool on_near_arc(const StripCrossings& x, Point p, const DiskStrip& strip);

// The far arc of `outer` stays on the far side of the far arc of `inner`:
// crossing params ordered accordingly on both lines (an all-ties situation is
// decided by comparing radii, exclusively), and the two arcs have no proper
// crossing strictly inside the strip. arc_left_of mirrors it for near arcs.
bool arc_right_of(const StripCrossings& inner, const StripCrossings& outer, const DiskStrip& strip);
bool arc_left_of(const StripCrossings& inner, const StripCrossings& outer, const DiskStrip& strip);

// Best clearance any chord of the two endpoint disks achieves against the
// point c: the maximum over unit directions u of
//   min(dot(a - c, u) + ra, dot(b - c, u) + rb),
// attained at dir. When positive it equals the largest distance from c to any
// segment joining D(a, ra) and D(b, rb), and a + ra*dir -> b + rb*dir is such
// a segment; hence a disk D(c, rho) meets every chord exactly when
// margin <= rho. The margin does not depend on rho, so blocking verdicts are
// monotone in the blocking radius.
struct ChordEscape {
  double margin = 0.0;
  Point dir{1.0, 0.0};
};
ChordEscape chord_escape(Point a, double ra, Point b, double rb, Point c);

// Fan-free triangulation between the two tangent-to-tangent boundary chains:
// merge both chains along the strip axis, emitting one cross edge per merge
// step; exactly |first_chain| + |last_chain| - 1 edges, ties advancing the
// first chain.
std::vector<std::pair<Point, Point>> triangulate_between_chains(
    const std::vector<Point>& first_chain, const std::vector<Point>& last_chain,
    const Segment& tangent0, const Segment& tangent1);

struct SegmentSplit {
  bool crossing = false;  // single-point intersection (touching counts)
  bool overlap = false;   // collinear overlap of positive length
  Point at;               // the crossing point, when crossing
  SegmentRegion shared;   // the common sub-segment, when overlap
  std::vector<SegmentRegion> parts_first, parts_last;
};

// Split two segment regions at their intersection. Without an intersection
// the parts are the whole segments; a point crossing splits each crossed
// segment at the point; a collinear overlap yields the shared sub-segment
// plus the pieces outside it.
SegmentSplit split_segments_at_crossing(const SegmentRegion& u1, const SegmentRegion& un);

// Clip a convex ring by a convex ring (Sutherland-Hodgman), canonicalised.
std::vector<Point> convex_clip(const std::vector<Point>& subject, const std::vector<Point>& clip);

// Interiors share positive area.
bool polygons_properly_intersect(const std::vector<Point>& p, const std::vector<Point>& q);

struct PolygonPartition {
  std::vector<Point> shared;  // R, the intersection of the two regions
  std::vector<std::vector<Point>> parts_first, parts_last;  // convex pieces outside R
};

// Partition two properly intersecting convex regions into their intersection
// R and convex difference pieces, split along the supporting lines of R.
PolygonPartition partition_intersecting_polygons(const std::vector<Point>& u1,
                                                 const std::vector<Point>& un);

// Convex hulls of two pieces, used to re-establish clean boundary chains
// after clipping introduced collinear or duplicate vertices.
std::pair<std::vector<Point>, std::vector<Point>> hull_repair_pair(const std::vector<Point>& p,
                                                                   const std::vector<Point>& q);

}  // namespace uncsimp
