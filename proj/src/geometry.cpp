#include "uncsimp/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace uncsimp {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }
void set_tolerance(double tau) { g_tolerance.store(tau, std::memory_order_relaxed); }

Point normalized(Point p) {
  double n = norm(p);
  if (n == 0.0) return {0.0, 0.0};
  return {p.x / n, p.y / n};
}

Point closest_point_on_segment(Point p, Point a, Point b) {
  Point d = b - a;
  double dd = dot(d, d);
  if (dd == 0.0) return a;
  double t = std::clamp(dot(p - a, d) / dd, 0.0, 1.0);
  return a + t * d;
}

double point_segment_distance(Point p, Point a, Point b) {
  return dist(p, closest_point_on_segment(p, a, b));
}

double point_segment_distance(Point p, const Segment& s) {
  return point_segment_distance(p, s.a, s.b);
}

Interval segment_disk_interval(const Segment& s, Point center, double rho, double t_lo) {
  const Interval none;
  const double r = rho + tolerance();
  if (r < 0.0) return none;
  const double start = std::max(t_lo, 1.0);
  if (start > 2.0) return none;

  Point d = s.dir();
  Point m = s.a - center;
  double qa = dot(d, d);
  double qc = dot(m, m) - r * r;
  if (qa == 0.0) {  // degenerate chord: pure point test
    if (qc <= 0.0) return {start, 2.0};
    return none;
  }
  double qb = 2.0 * dot(d, m);
  double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return none;
  double sq = std::sqrt(disc);
  double u1, u2;
  if (qb == 0.0) {
    u2 = sq / (2.0 * qa);
    u1 = -u2;
  } else {
    double q = -0.5 * (qb + std::copysign(sq, qb));
    u1 = q / qa;
    u2 = qc / q;
    if (u1 > u2) std::swap(u1, u2);
  }
  double lo = std::max(start, 1.0 + u1);
  double hi = std::min(2.0, 1.0 + u2);
  if (lo > hi) return none;
  return {lo, hi};
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Point> u;
  for (Point p : pts)
    if (u.empty() || dist(u.back(), p) > tolerance()) u.push_back(p);
  if (u.size() <= 2) return u;

  auto build = [](auto begin, auto end) {
    std::vector<Point> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 &&
             cross(h[h.size() - 1] - h[h.size() - 2], *it - h[h.size() - 1]) <= tolerance())
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<Point> lower = build(u.begin(), u.end());
  std::vector<Point> upper = build(u.rbegin(), u.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

double polygon_area(const std::vector<Point>& ring) {
  double twice = 0.0;
  for (size_t i = 0; i < ring.size(); ++i)
    twice += cross(ring[i], ring[(i + 1) % ring.size()]);
  return 0.5 * twice;
}

Point centroid(const std::vector<Point>& pts) {
  Point c{0.0, 0.0};
  if (pts.empty()) return c;
  for (Point p : pts) c = c + p;
  return (1.0 / static_cast<double>(pts.size())) * c;
}

double max_distance_convex(const std::vector<Point>& a, const std::vector<Point>& b) {
  return dist(max_distance_convex_pair(a, b).first, max_distance_convex_pair(a, b).second);
}

std::pair<Point, Point> max_distance_convex_pair(const std::vector<Point>& a,
                                                 const std::vector<Point>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty vertex set");
  std::pair<Point, Point> best{a[0], b[0]};
  double bestd = -1.0;
  for (Point p : a)
    for (Point q : b)
      if (double d = dist(p, q); d > bestd) {
        bestd = d;
        best = {p, q};
      }
  return best;
}

DiskTangents outer_tangents_disks(Point c1, double r1, Point c2, double r2) {
  DiskTangents out;
  double d = dist(c1, c2);
  if (d + std::min(r1, r2) <= std::max(r1, r2) + tolerance()) {
    out.containment = true;
    return out;
  }
  Point u = normalized(c2 - c1);
  double k = (r1 - r2) / d;
  double h = std::sqrt(std::max(0.0, 1.0 - k * k));
  Point up = perp(u);
  Point nl = k * u + h * up;
  Point nr = k * u - h * up;
  out.tangent[0] = {c1 + r1 * nl, c2 + r2 * nl};
  out.tangent[1] = {c1 + r1 * nr, c2 + r2 * nr};
  return out;
}

CircleIntersections circle_circle_intersections(Point c1, double r1, Point c2, double r2) {
  CircleIntersections out;
  double tau = tolerance();
  double d = dist(c1, c2);
  if (d <= tau && std::abs(r1 - r2) <= tau) {
    if (r1 <= tau) {  // two coincident point-circles meet in that point
      out.count = 1;
      out.p[0] = c1;
    } else {
      out.coincident = true;
    }
    return out;
  }
  if (d == 0.0) return out;  // concentric, distinct radii
  Point u = normalized(c2 - c1);
  double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  double h2 = r1 * r1 - a * a;
  if (h2 < 0.0) {
    bool external = std::abs(d - (r1 + r2)) <= tau;
    bool internal = std::abs(d - std::abs(r1 - r2)) <= tau;
    if (external || internal) {
      out.count = 1;
      double sgn = (!external && r1 < r2) ? -1.0 : 1.0;
      out.p[0] = c1 + (sgn * r1) * u;
    }
    return out;
  }
  double h = std::sqrt(h2);
  Point base = c1 + a * u;
  if (h <= tau) {
    out.count = 1;
    out.p[0] = base;
    return out;
  }
  out.count = 2;
  out.p[0] = base + h * perp(u);
  out.p[1] = base - h * perp(u);
  return out;
}

namespace {

struct Tagged {
  Point p;
  bool in_p = false;
  bool in_q = false;
};

size_t ring_index(const std::vector<Point>& ring, Point v) {
  for (size_t i = 0; i < ring.size(); ++i)
    if (coincident(ring[i], v)) return i;
  throw std::logic_error("touch point not on ring");
}

// Walk ring from a to b; of the two walks, return the one facing the gap
// (no interior vertex on the union hull).
std::vector<Point> inner_chain(const std::vector<Point>& ring, Point a, Point b,
                               const std::vector<Point>& union_hull) {
  size_t ia = ring_index(ring, a);
  size_t ib = ring_index(ring, b);
  auto walk = [&](bool forward) {
    std::vector<Point> out;
    size_t k = ia;
    while (true) {
      out.push_back(ring[k]);
      if (k == ib) break;
      k = forward ? (k + 1) % ring.size() : (k + ring.size() - 1) % ring.size();
    }
    return out;
  };
  auto on_hull = [&](Point v) {
    for (Point h : union_hull)
      if (coincident(h, v)) return true;
    return false;
  };
  auto qualifies = [&](const std::vector<Point>& c) {
    for (size_t i = 1; i + 1 < c.size(); ++i)
      if (on_hull(c[i])) return false;
    return true;
  };
  std::vector<Point> fwd = walk(true);
  std::vector<Point> rev = walk(false);
  bool fok = qualifies(fwd);
  bool rok = qualifies(rev);
  if (fok && !rok) return fwd;
  if (rok && !fok) return rev;
  if (!fok && !rok) throw std::logic_error("no gap-facing chain");
  return fwd.size() <= rev.size() ? fwd : rev;
}

// Near-rule touch points on the tangent line through hull edge (pv, qv),
// oriented from the P side to the Q side.
std::pair<Point, Point> refine_touch(const std::vector<Point>& hp, const std::vector<Point>& hq,
                                     Point pv, Point qv) {
  Point d = normalized(qv - pv);
  double tau = tolerance();
  auto pick = [&](const std::vector<Point>& ring, Point fallback, bool toward) {
    Point best = fallback;
    double bestproj = dot(fallback, d);
    for (Point v : ring) {
      if (std::abs(cross(d, v - pv)) > tau) continue;  // not on the tangent line
      double proj = dot(v, d);
      if (toward ? proj > bestproj : proj < bestproj) {
        bestproj = proj;
        best = v;
      }
    }
    return best;
  };
  return {pick(hp, pv, true), pick(hq, qv, false)};
}

// Area of the intersection of two convex hulls. The union-hull labelling
// below cannot see overlaps where each region keeps one contiguous hull arc,
// so proper intersection is ruled out by area instead.
double convex_overlap_area(std::vector<Point> cur, const std::vector<Point>& clip) {
  if (clip.size() < 3) return 0.0;
  for (size_t i = 0; i < clip.size() && !cur.empty(); ++i) {
    Point o = clip[i];
    Point d = clip[(i + 1) % clip.size()] - o;
    double scale = std::max(1.0, norm(d));
    std::vector<Point> nxt;
    size_t m = cur.size();
    for (size_t k = 0; k < m; ++k) {
      Point a = cur[k], b = cur[(k + 1) % m];
      double sa = cross(d, a - o) / scale;
      double sb = cross(d, b - o) / scale;
      if (sa >= -tolerance()) nxt.push_back(a);
      if ((sa > tolerance() && sb < -tolerance()) || (sa < -tolerance() && sb > tolerance()))
        nxt.push_back(a + (sa / (sa - sb)) * (b - a));
    }
    cur = std::move(nxt);
  }
  return cur.size() < 3 ? 0.0 : polygon_area(cur);
}

}  // namespace

PolygonTangents outer_tangents_polygons(const std::vector<Point>& praw,
                                        const std::vector<Point>& qraw) {
  if (praw.empty() || qraw.empty()) throw std::invalid_argument("empty region");
  std::vector<Point> hp = convex_hull(praw);
  std::vector<Point> hq = convex_hull(qraw);
  if (convex_overlap_area(hp, hq) > tolerance())
    throw std::invalid_argument("region interiors properly intersect");

  std::vector<Tagged> merged;
  auto add = [&](Point v, bool from_p) {
    for (Tagged& t : merged)
      if (coincident(t.p, v)) {
        (from_p ? t.in_p : t.in_q) = true;
        return;
      }
    Tagged t;
    t.p = v;
    (from_p ? t.in_p : t.in_q) = true;
    merged.push_back(t);
  };
  for (Point v : hp) add(v, true);
  for (Point v : hq) add(v, false);

  std::vector<Point> allpts;
  allpts.reserve(merged.size());
  for (const Tagged& t : merged) allpts.push_back(t.p);
  std::vector<Point> hull = convex_hull(allpts);

  PolygonTangents out;

  if (hull.size() <= 2) {  // everything collinear
    Point axis = hull.size() == 2 ? normalized(hull[1] - hull[0]) : Point{1.0, 0.0};
    Point org = hull[0];
    auto extremes = [&](const std::vector<Point>& ring) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      Point plo{}, phi{};
      for (Point v : ring) {
        double s = dot(v - org, axis);
        if (s < lo) { lo = s; plo = v; }
        if (s > hi) { hi = s; phi = v; }
      }
      return std::tuple{lo, hi, plo, phi};
    };
    auto [plo, phi, pl, ph] = extremes(hp);
    auto [qlo, qhi, ql, qh] = extremes(hq);
    if (std::min(phi, qhi) - std::max(plo, qlo) > tolerance())
      throw std::invalid_argument("collinear regions overlap");
    Point a = phi <= qlo + tolerance() ? ph : pl;
    Point b = phi <= qlo + tolerance() ? ql : qh;
    out.tangent[0] = {a, b};
    out.tangent[1] = {a, b};
    out.chain_p = {a};
    out.chain_q = {b};
    return out;
  }

  const size_t m = hull.size();
  std::vector<char> lab(m);
  for (size_t i = 0; i < m; ++i) {
    const Tagged* t = nullptr;
    for (const Tagged& c : merged)
      if (coincident(c.p, hull[i])) { t = &c; break; }
    if (!t) throw std::logic_error("hull vertex lost");
    lab[i] = t->in_p && t->in_q ? 'B' : (t->in_p ? 'P' : 'Q');
  }

  bool has_p = false, has_q = false;
  for (char c : lab) {
    has_p |= c == 'P';
    has_q |= c == 'Q';
  }

  Point touch_p0, touch_q0, touch_p1, touch_q1;

  if (!has_p || !has_q) {
    // One region shows up on the union hull only through shared points. Legal
    // only for a degenerate region lying on the other's boundary.
    const std::vector<Point>& small = !has_p ? hp : hq;
    if (small.size() > 2 || std::none_of(lab.begin(), lab.end(), [](char c) { return c == 'B'; }))
      throw std::invalid_argument("region interiors properly intersect");
    // Contiguous run of B's; its ends carry both touch points.
    size_t first = m, last = m;
    size_t runs = 0;
    for (size_t i = 0; i < m; ++i) {
      if (lab[i] == 'B' && lab[(i + m - 1) % m] != 'B') {
        ++runs;
        first = i;
      }
      if (lab[i] == 'B' && lab[(i + 1) % m] != 'B') last = i;
    }
    if (runs != 1) throw std::invalid_argument("region interiors properly intersect");
    touch_p0 = touch_q0 = hull[first];
    touch_p1 = touch_q1 = hull[last];
  } else {
    // The pure labels must form one P block and one Q block; isolated B's may
    // separate them and act as degenerate tangents.
    std::vector<size_t> pure;
    for (size_t i = 0; i < m; ++i)
      if (lab[i] != 'B') pure.push_back(i);
    size_t changes = 0;
    for (size_t k = 0; k < pure.size(); ++k)
      if (lab[pure[k]] != lab[pure[(k + 1) % pure.size()]]) ++changes;
    if (changes != 2) throw std::invalid_argument("region interiors properly intersect");
    for (size_t i = 0; i < m; ++i) {
      if (lab[i] != 'B') continue;
      if (lab[(i + m - 1) % m] == 'B' || lab[(i + 1) % m] == 'B')
        throw std::invalid_argument("region interiors properly intersect");
    }
    // Locate the two transitions in hull order.
    bool found_pq = false, found_qp = false;
    for (size_t i = 0; i < m; ++i) {
      char cu = lab[i];
      char cv = lab[(i + 1) % m];
      if (cu == 'B') continue;
      if (cv == 'B') {
        char cw = lab[(i + 2) % m];
        if (cu == 'P' && cw == 'Q') {
          touch_p0 = touch_q0 = hull[(i + 1) % m];
          found_pq = true;
        } else if (cu == 'Q' && cw == 'P') {
          touch_p1 = touch_q1 = hull[(i + 1) % m];
          found_qp = true;
        }
      } else if (cu == 'P' && cv == 'Q') {
        auto [tp, tq] = refine_touch(hp, hq, hull[i], hull[(i + 1) % m]);
        touch_p0 = tp;
        touch_q0 = tq;
        found_pq = true;
      } else if (cu == 'Q' && cv == 'P') {
        auto [tp, tq] = refine_touch(hp, hq, hull[(i + 1) % m], hull[i]);
        touch_p1 = tp;
        touch_q1 = tq;
        found_qp = true;
      }
    }
    if (!found_pq || !found_qp) throw std::logic_error("tangent transitions not found");
  }

  out.tangent[0] = {touch_p0, touch_q0};
  out.tangent[1] = {touch_p1, touch_q1};
  out.chain_p = inner_chain(hp, touch_p0, touch_p1, hull);
  out.chain_q = inner_chain(hq, touch_q0, touch_q1, hull);
  return out;
}

}  // namespace uncsimp
