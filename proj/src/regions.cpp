#include "uncsimp/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uncsimp {

namespace {

Point strip_axis(const DiskStrip& strip) {
  Point s = strip.line[0].dir + strip.line[1].dir;
  double n = norm(s);
  if (n > tolerance()) return (1.0 / n) * s;
  return strip.line[0].dir;
}

}  // namespace

DiskStrip build_disk_strip(const DiskRegion& a, const DiskRegion& b) {
  DiskStrip strip;
  double d = dist(a.center, b.center);
  if (d <= tolerance() && std::abs(a.radius - b.radius) <= tolerance()) {
    strip.kind = DiskStrip::Kind::identical;
    return strip;
  }
  if (d + std::min(a.radius, b.radius) <= std::max(a.radius, b.radius) + tolerance()) {
    strip.kind = DiskStrip::Kind::containment;
    strip.small_first = a.radius < b.radius;
    return strip;
  }
  DiskTangents tan = outer_tangents_disks(a.center, a.radius, b.center, b.radius);
  strip.tangent[0] = tan.tangent[0];
  strip.tangent[1] = tan.tangent[1];
  for (int j = 0; j < 2; ++j) {
    StripLine& ln = strip.line[j];
    ln.origin = strip.tangent[j].a;
    ln.dir = normalized(strip.tangent[j].b - strip.tangent[j].a);
    double side = cross(ln.dir, a.center - ln.origin);
    if (std::abs(side) <= tolerance()) side = cross(ln.dir, b.center - ln.origin);
    ln.inner = side < 0.0 ? -1.0 : 1.0;
  }
  auto pin = [&](Point c, double r, Point t0, Point t1) {
    StripCrossings x;
    x.center = c;
    x.radius = r;
    x.lo[0] = x.hi[0] = strip.line[0].param(t0);
    x.lo[1] = x.hi[1] = strip.line[1].param(t1);
    x.plo[0] = x.phi[0] = t0;
    x.plo[1] = x.phi[1] = t1;
    return x;
  };
  strip.first = pin(a.center, a.radius, strip.tangent[0].a, strip.tangent[1].a);
  strip.last = pin(b.center, b.radius, strip.tangent[0].b, strip.tangent[1].b);
  return strip;
}

std::optional<StripCrossings> strip_crossings(Point center, double radius,
                                              const DiskStrip& strip) {
  double r = std::max(radius, 0.0);
  if (radius < -tolerance()) return std::nullopt;
  StripCrossings x;
  x.center = center;
  x.radius = r;
  for (int j = 0; j < 2; ++j) {
    const StripLine& ln = strip.line[j];
    double off = cross(ln.dir, center - ln.origin);
    if (std::abs(off) > r + tolerance()) return std::nullopt;
    double half = std::sqrt(std::max(0.0, r * r - off * off));
    double proj = ln.param(center);
    x.lo[j] = proj - half;
    x.hi[j] = proj + half;
    x.plo[j] = ln.origin + x.lo[j] * ln.dir;
    x.phi[j] = ln.origin + x.hi[j] * ln.dir;
  }
  return x;
}

bool strictly_inside_strip(Point p, const DiskStrip& strip) {
  return strip.line[0].signed_inside(p) > tolerance() &&
         strip.line[1].signed_inside(p) > tolerance();
}

namespace {

// Arc membership by circular order: the far (near) piece runs between the two
// far (near) crossings on the side that avoids the opposite crossings. The
// chord-side shortcut is not reliable here; when the crossing chord passes
// close to the circle's axis extreme, rounding flips the reference side and
// inverts every answer. Degenerate configurations without a usable avoid
// point (pinned circles, tangency, strip lines meeting inside the circle)
// fall back to the axis-projection side of the center.
bool on_arc(const StripCrossings& x, Point p, const DiskStrip& strip, bool far) {
  Point a = far ? x.phi[0] : x.plo[0];
  Point b = far ? x.phi[1] : x.plo[1];
  Point other[2] = {far ? x.plo[0] : x.phi[0], far ? x.plo[1] : x.phi[1]};
  auto axis_side = [&] {
    double side = dot(p - x.center, strip_axis(strip));
    return far ? side >= -tolerance() : side <= tolerance();
  };
  if (dist(a, b) <= tolerance()) return axis_side();
  auto angle = [&](Point q) { return std::atan2(q.y - x.center.y, q.x - x.center.x); };
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto ccw = [&](double from, double to) {
    double d = std::fmod(to - from, two_pi);
    return d < 0.0 ? d + two_pi : d;
  };
  double base = angle(a);
  double span = ccw(base, angle(b));
  int votes = 0, inside = 0;
  for (Point q : other) {
    if (dist(q, a) <= tolerance() || dist(q, b) <= tolerance()) continue;
    ++votes;
    if (ccw(base, angle(q)) <= span) ++inside;
  }
  if (votes == 0 || (votes == 2 && inside == 1)) return axis_side();
  double pos = ccw(base, angle(p));
  double slack = tolerance() / std::max(x.radius, tolerance());
  if (inside > 0) return pos >= span - slack || pos <= slack;
  return pos <= span + slack || pos >= two_pi - slack;
}

// Proper (transversal) crossing of the two circles' far or near arcs strictly
// inside the strip. Tangential touches do not count.
bool arcs_properly_cross(const StripCrossings& a, const StripCrossings& b, const DiskStrip& strip,
                         bool far) {
  CircleIntersections xs = circle_circle_intersections(a.center, a.radius, b.center, b.radius);
  if (xs.coincident || xs.count < 2) return false;
  for (int i = 0; i < 2; ++i) {
    Point q = xs.p[i];
    if (!strictly_inside_strip(q, strip)) continue;
    if (on_arc(a, q, strip, far) && on_arc(b, q, strip, far)) return true;
  }
  return false;
}

bool arc_order(const StripCrossings& inner, const StripCrossings& outer, const DiskStrip& strip,
               bool far) {
  bool tie0, tie1;
  if (far) {
    tie0 = std::abs(outer.hi[0] - inner.hi[0]) <= tolerance();
    tie1 = std::abs(outer.hi[1] - inner.hi[1]) <= tolerance();
    if (tie0 && tie1) return inner.radius > outer.radius + tolerance();
    if (outer.hi[0] < inner.hi[0] - tolerance()) return false;
    if (outer.hi[1] < inner.hi[1] - tolerance()) return false;
  } else {
    tie0 = std::abs(outer.lo[0] - inner.lo[0]) <= tolerance();
    tie1 = std::abs(outer.lo[1] - inner.lo[1]) <= tolerance();
    if (tie0 && tie1) return inner.radius > outer.radius + tolerance();
    if (outer.lo[0] > inner.lo[0] + tolerance()) return false;
    if (outer.lo[1] > inner.lo[1] + tolerance()) return false;
  }
  return !arcs_properly_cross(inner, outer, strip, far);
}

}  // namespace

bool on_far_arc(const StripCrossings& x, Point p, const DiskStrip& strip) {
  return on_arc(x, p, strip, true);
}

bool on_near_arc(const StripCrossings& x, Point p, const DiskStrip& strip) {
  return on_arc(x, p, strip, false);
}

bool arc_right_of(const StripCrossings& inner, const StripCrossings& outer,
                  const DiskStrip& strip) {
  return arc_order(inner, outer, strip, true);
}

bool arc_left_of(const StripCrossings& inner, const StripCrossings& outer,
                 const DiskStrip& strip) {
  return arc_order(inner, outer, strip, false);
}

ChordEscape chord_escape(Point a, double ra, Point b, double rb, Point c) {
  Point va = a - c, vb = b - c;
  ChordEscape best{std::min(ra, rb), {1.0, 0.0}};  // exact when a, b, c coincide
  bool seeded = false;
  auto consider = [&](Point u) {
    double n = norm(u);
    if (n <= tolerance()) return;
    u = (1.0 / n) * u;
    double v = std::min(dot(va, u) + ra, dot(vb, u) + rb);
    if (!seeded || v > best.margin) {
      best = {v, u};
      seeded = true;
    }
  };
  // The maximum of a min of two linear functions over the unit circle sits
  // either at a single-branch optimum or where the branches tie.
  consider(va);
  consider(vb);
  Point w = a - b;
  double ww = dot(w, w);
  double t = rb - ra;
  double s2 = ww - t * t;
  if (ww > tolerance() * tolerance() && s2 >= 0.0) {
    double s = std::sqrt(s2);
    Point base = (t / ww) * w;
    Point off = (s / ww) * perp(w);
    consider(base + off);
    consider(base - off);
  }
  return best;
}

std::vector<std::pair<Point, Point>> triangulate_between_chains(
    const std::vector<Point>& first_chain, const std::vector<Point>& last_chain,
    const Segment& tangent0, const Segment& tangent1) {
  if (first_chain.empty() || last_chain.empty())
    throw std::invalid_argument("chains must be non-empty");
  Point m0 = 0.5 * (tangent0.a + tangent0.b);
  Point m1 = 0.5 * (tangent1.a + tangent1.b);
  Point axis = m1 - m0;
  double n = norm(axis);
  axis = n > tolerance() ? (1.0 / n) * axis : Point{0.0, 0.0};

  std::vector<std::pair<Point, Point>> edges;
  edges.reserve(first_chain.size() + last_chain.size() - 1);
  size_t i = 0, j = 0;
  edges.push_back({first_chain[0], last_chain[0]});
  while (i + 1 < first_chain.size() || j + 1 < last_chain.size()) {
    bool advance_first;
    if (i + 1 >= first_chain.size()) {
      advance_first = false;
    } else if (j + 1 >= last_chain.size()) {
      advance_first = true;
    } else {
      double pa = dot(first_chain[i + 1], axis);
      double pb = dot(last_chain[j + 1], axis);
      advance_first = pa <= pb + tolerance();
    }
    if (advance_first)
      ++i;
    else
      ++j;
    edges.push_back({first_chain[i], last_chain[j]});
  }
  return edges;
}

SegmentSplit split_segments_at_crossing(const SegmentRegion& u1, const SegmentRegion& un) {
  SegmentSplit out;
  Point d1 = u1.b - u1.a, d2 = un.b - un.a;
  double denom = cross(d1, d2);
  double scale = std::max(1.0, std::max(norm(d1), norm(d2)));

  auto whole = [&]() {
    out.parts_first = {u1};
    out.parts_last = {un};
  };

  if (std::abs(denom) > tolerance() * scale * scale) {
    double t = cross(un.a - u1.a, d2) / denom;
    double u = cross(un.a - u1.a, d1) / denom;
    Point s = u1.a + t * d1;
    bool on1 = point_segment_distance(s, u1.a, u1.b) <= tolerance();
    bool on2 = point_segment_distance(s, un.a, un.b) <= tolerance();
    if (!(on1 && on2) || t < -1.0 || t > 2.0 || u < -1.0 || u > 2.0) {
      whole();
      return out;
    }
    out.crossing = true;
    out.at = s;
    auto pieces = [&](const SegmentRegion& seg) {
      std::vector<SegmentRegion> ps;
      if (dist(s, seg.a) > tolerance()) ps.push_back({seg.a, s});
      if (dist(s, seg.b) > tolerance()) ps.push_back({s, seg.b});
      if (ps.empty()) ps.push_back({s, s});
      return ps;
    };
    out.parts_first = pieces(u1);
    out.parts_last = pieces(un);
    return out;
  }

  // Parallel. Check collinearity via the distance of un's endpoints to u1's line.
  bool deg1 = norm(d1) <= tolerance(), deg2 = norm(d2) <= tolerance();
  if (deg1 && deg2) {
    if (coincident(u1.a, un.a)) {
      out.crossing = true;
      out.at = u1.a;
      out.parts_first = {{u1.a, u1.a}};
      out.parts_last = {{un.a, un.a}};
    } else {
      whole();
    }
    return out;
  }
  Point axis = deg1 ? normalized(d2) : normalized(d1);
  Point base = deg1 ? un.a : u1.a;
  auto offline = [&](Point p) { return std::abs(cross(axis, p - base)) > tolerance(); };
  if ((!deg1 && (offline(un.a) || offline(un.b))) || (deg1 && !deg2 && offline(u1.a))) {
    whole();
    return out;
  }

  double p0 = dot(u1.a - base, axis), p1 = dot(u1.b - base, axis);
  double q0 = dot(un.a - base, axis), q1 = dot(un.b - base, axis);
  if (p0 > p1) std::swap(p0, p1);
  if (q0 > q1) std::swap(q0, q1);
  double lo = std::max(p0, q0), hi = std::min(p1, q1);
  if (hi - lo > tolerance()) {
    out.overlap = true;
    Point slo = base + lo * axis, shi = base + hi * axis;
    out.shared = {slo, shi};
    auto outside = [&](double plo, double phi) {
      std::vector<SegmentRegion> ps;
      if (lo - plo > tolerance()) ps.push_back({base + plo * axis, slo});
      if (phi - hi > tolerance()) ps.push_back({shi, base + phi * axis});
      return ps;
    };
    out.parts_first = outside(p0, p1);
    out.parts_last = outside(q0, q1);
    return out;
  }
  if (hi - lo >= -tolerance()) {
    // Collinear single-point touch.
    out.crossing = true;
    out.at = base + (0.5 * (lo + hi)) * axis;
    auto pieces = [&](const SegmentRegion& seg) {
      std::vector<SegmentRegion> ps;
      if (dist(out.at, seg.a) > tolerance()) ps.push_back({seg.a, out.at});
      if (dist(out.at, seg.b) > tolerance()) ps.push_back({out.at, seg.b});
      if (ps.empty()) ps.push_back({out.at, out.at});
      return ps;
    };
    out.parts_first = pieces(u1);
    out.parts_last = pieces(un);
    return out;
  }
  whole();
  return out;
}

namespace {

// Keep the part of a ring on one side of the oriented line through o with
// direction d; keep_left selects cross(d, p - o) >= 0.
std::vector<Point> clip_half(const std::vector<Point>& ring, Point o, Point d, bool keep_left) {
  double scale = std::max(1.0, norm(d));
  auto side = [&](Point p) {
    double s = cross(d, p - o) / scale;
    return keep_left ? s : -s;
  };
  if (ring.empty()) return {};
  if (ring.size() == 1) return side(ring[0]) >= -tolerance() ? ring : std::vector<Point>{};
  std::vector<Point> out;
  size_t m = ring.size();
  for (size_t i = 0; i < m; ++i) {
    Point a = ring[i], b = ring[(i + 1) % m];
    double sa = side(a), sb = side(b);
    if (sa >= -tolerance()) out.push_back(a);
    if ((sa > tolerance() && sb < -tolerance()) || (sa < -tolerance() && sb > tolerance())) {
      double t = sa / (sa - sb);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

}  // namespace

std::vector<Point> convex_clip(const std::vector<Point>& subject, const std::vector<Point>& clip) {
  if (subject.empty() || clip.empty()) return {};
  std::vector<Point> cur = subject;
  if (clip.size() == 1) {
    // Clip region is a point: result is that point when inside the subject.
    PolygonRegion probe{subject};
    return region_membership(Region{probe}, clip[0]) ? clip : std::vector<Point>{};
  }
  if (clip.size() == 2) {
    Point d = clip[1] - clip[0];
    cur = clip_half(cur, clip[0], d, true);
    cur = clip_half(cur, clip[0], d, false);
    // End caps keep the span between the endpoints along d.
    cur = clip_half(cur, clip[0], perp(d), false);
    cur = clip_half(cur, clip[1], perp(d), true);
    return convex_hull(cur);
  }
  for (size_t i = 0; i < clip.size() && !cur.empty(); ++i) {
    Point a = clip[i], b = clip[(i + 1) % clip.size()];
    cur = clip_half(cur, a, b - a, true);
  }
  return convex_hull(cur);
}

bool polygons_properly_intersect(const std::vector<Point>& p, const std::vector<Point>& q) {
  std::vector<Point> r = convex_clip(p, q);
  if (r.size() < 3) return false;
  return polygon_area(r) > tolerance();
}

namespace {

// Keep-left half-planes whose intersection is the hull of r (r.size() >= 2).
// A segment needs its two sides plus end caps.
std::vector<std::pair<Point, Point>> ring_halfplanes(const std::vector<Point>& r) {
  std::vector<std::pair<Point, Point>> hp;
  if (r.size() >= 3) {
    for (size_t i = 0; i < r.size(); ++i) hp.push_back({r[i], r[(i + 1) % r.size()] - r[i]});
    return hp;
  }
  Point d = r[1] - r[0];
  hp.push_back({r[0], d});
  hp.push_back({r[0], -1.0 * d});
  hp.push_back({r[0], -1.0 * perp(d)});  // dot(p - r[0], d) >= 0
  hp.push_back({r[1], perp(d)});         // dot(p - r[1], d) <= 0
  return hp;
}

}  // namespace

PolygonPartition partition_intersecting_polygons(const std::vector<Point>& u1,
                                                 const std::vector<Point>& un) {
  PolygonPartition part;
  part.shared = convex_clip(u1, un);
  const std::vector<Point>& r = part.shared;
  if (r.size() < 2)
    throw std::invalid_argument("regions do not overlap in more than a point");

  auto split_outside = [&](const std::vector<Point>& poly) {
    std::vector<std::vector<Point>> parts;
    std::vector<Point> cur = poly;
    for (const auto& [o, d] : ring_halfplanes(r)) {
      if (cur.empty()) break;
      std::vector<Point> outside = convex_hull(clip_half(cur, o, d, false));
      cur = clip_half(cur, o, d, true);
      // A genuine piece extends strictly beyond the boundary line; anything
      // lying on the line itself belongs to R or to another half-plane's piece.
      double scale = std::max(1.0, norm(d));
      bool beyond = false;
      for (Point p : outside) beyond = beyond || cross(d, p - o) < -tolerance() * scale;
      if (beyond) parts.push_back(std::move(outside));
    }
    return parts;
  };
  part.parts_first = split_outside(u1);
  part.parts_last = split_outside(un);
  return part;
}

std::pair<std::vector<Point>, std::vector<Point>> hull_repair_pair(const std::vector<Point>& p,
                                                               const std::vector<Point>& q) {
  return {convex_hull(p), convex_hull(q)};
}

}  // namespace uncsimp
