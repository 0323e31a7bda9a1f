#include "uncsimp/shortcuts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uncsimp {

bool realisation_within_chord(const std::vector<Point>& poly, double eps, Metric metric) {
  if (metric == Metric::hausdorff) return hausdorff_to_chord(poly) <= eps + tolerance();
  return frechet_to_chord(poly, eps);
}

namespace {

Point unit_or(Point d, Point fallback) {
  double n = norm(d);
  return n > tolerance() ? (1.0 / n) * d : fallback;
}

// Representative boundary points of a region, used as endpoint candidates in
// witness searches.
std::vector<Point> endpoint_candidates(const Region& r, Point axis) {
  if (auto* d = std::get_if<DiskRegion>(&r)) {
    Point u = unit_or(axis, {1.0, 0.0});
    Point v = perp(u);
    double rr = d->radius;
    return {d->center, d->center + rr * u, d->center - rr * u, d->center + rr * v,
            d->center - rr * v};
  }
  return region_vertices(r);
}

struct Ctx {
  const UncertainCurve& c;
  size_t i, j;
  double eps;
  Metric metric;
  const ShortcutOptions& opt;
  ShortcutCertificate cert;
  std::optional<Realisation> exact;  // witness built by the failing subcheck

  Ctx(const UncertainCurve& cc, size_t ii, size_t jj, double e, Metric m,
      const ShortcutOptions& o)
      : c(cc), i(ii), j(jj), eps(e), metric(m), opt(o) {}

  void push(const char* kind, bool ok, long region = -1, long a = -1, long b = -1) {
    cert.checks.push_back({kind, ok, region, a, b});
    cert.valid = cert.valid && ok;
  }

  long hausdorff_argmax(Point pf, Point pl) const {
    long worst_k = -1;
    double worst = -1.0;
    for (size_t k = i + 1; k < j; ++k) {
      double v = hausdorff_fixed(c, k - 1, k + 1, pf, pl);
      if (v > worst) {
        worst = v;
        worst_k = static_cast<long>(k);
      }
    }
    return worst_k;
  }

  // Fixed-endpoint check against the chord pf -> pl, recorded as a subcheck.
  bool fixed(Point pf, Point pl, const char* kind, long a = -1, long b = -1) {
    GreedyTrace tr;
    Realisation wit;
    bool ok = fixed_endpoint_check(c, i, j, pf, pl, eps, metric, &tr,
                                   opt.want_witness ? &wit : nullptr);
    SubCheck sc{kind, ok, -1, a, b};
    if (!ok) {
      sc.region = metric == Metric::frechet ? static_cast<long>(tr.fail_index)
                                            : hausdorff_argmax(pf, pl);
      if (opt.want_witness && !exact && !wit.empty()) exact = std::move(wit);
      if (opt.want_trace) cert.trace = tr.s;
    } else if (opt.want_trace && cert.valid) {
      cert.trace = tr.s;
    }
    cert.checks.push_back(std::move(sc));
    cert.valid = cert.valid && ok;
    return ok;
  }

  // Every point of region k within eps of every point of the shared region
  // (vertex set rv). Exact witness on failure: both endpoints at the worst
  // shared vertex.
  bool shared_region(size_t k, const std::vector<Point>& rv) {
    const Region& reg = c.points[k];
    double worst = -1.0;
    Point worst_v = rv[0];
    for (Point v : rv) {
      double d;
      if (auto* dk = std::get_if<DiskRegion>(&reg)) {
        d = dist(dk->center, v) + dk->radius;
      } else {
        d = 0.0;
        for (Point u : region_vertices(reg)) d = std::max(d, dist(u, v));
      }
      if (d > worst) {
        worst = d;
        worst_v = v;
      }
    }
    bool ok = worst <= eps + tolerance();
    push("shared_region", ok, static_cast<long>(k));
    if (!ok && opt.want_witness && !exact)
      exact = hausdorff_worst_interior(c, i, j, worst_v, worst_v);
    return ok;
  }

  bool violates(const Realisation& r) const {
    return !realisation_within_chord(r, eps + 2.0 * tolerance(), metric);
  }

  // Disk endpoints admit a continuum of chords; maximise the exact worst
  // interior distance over the two boundary angles with a coarse scan plus
  // multi-start local refinement. Deterministic.
  std::optional<Realisation> refine_disk_endpoints() const {
    if (c.model != Model::disk) return std::nullopt;
    const auto& di = std::get<DiskRegion>(c.points[i]);
    const auto& dj = std::get<DiskRegion>(c.points[j]);
    auto at = [](const DiskRegion& d, double th) {
      return d.center + d.radius * Point{std::cos(th), std::sin(th)};
    };
    auto score = [&](double t0, double t1) {
      return hausdorff_fixed(c, i, j, at(di, t0), at(dj, t1));
    };
    constexpr double kTurn = 6.283185307179586;
    constexpr int kCoarse = 24;
    struct Start {
      double s, t0, t1;
    };
    std::vector<Start> starts;
    for (int u = 0; u < kCoarse; ++u)
      for (int v = 0; v < kCoarse; ++v) {
        double t0 = kTurn * u / kCoarse, t1 = kTurn * v / kCoarse;
        starts.push_back({score(t0, t1), t0, t1});
      }
    std::sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) {
      return a.s > b.s;
    });
    double best = -1.0, b0 = 0.0, b1 = 0.0;
    for (size_t s = 0; s < starts.size() && s < 4; ++s) {
      double c0 = starts[s].t0, c1 = starts[s].t1, span = 2.0 * kTurn / kCoarse;
      double lb = starts[s].s, l0 = c0, l1 = c1;
      while (span > 1e-9) {
        for (int u = -4; u <= 4; ++u)
          for (int v = -4; v <= 4; ++v) {
            double t0 = c0 + span * u / 8.0, t1 = c1 + span * v / 8.0;
            double sc = score(t0, t1);
            if (sc > lb) {
              lb = sc;
              l0 = t0;
              l1 = t1;
            }
          }
        c0 = l0;
        c1 = l1;
        span *= 0.25;
      }
      if (lb > best) {
        best = lb;
        b0 = l0;
        b1 = l1;
      }
    }
    return hausdorff_worst_interior(c, i, j, at(di, b0), at(dj, b1));
  }

  void finalize_witness() {
    if (exact && violates(*exact)) {
      cert.witness = std::move(*exact);
      cert.witness_verified = true;
      return;
    }
    auto refpoint = [&](const Region& r) {
      if (auto* d = std::get_if<DiskRegion>(&r)) return d->center;
      return region_vertices(r)[0];
    };
    Point axis = refpoint(c.points[j]) - refpoint(c.points[i]);
    std::vector<Realisation> candidates;
    for (Point p : endpoint_candidates(c.points[i], axis))
      for (Point q : endpoint_candidates(c.points[j], axis))
        candidates.push_back(hausdorff_worst_interior(c, i, j, p, q));
    if (auto refined = refine_disk_endpoints()) candidates.push_back(std::move(*refined));
    for (const Realisation& r : candidates) {
      if (violates(r)) {
        cert.witness = r;
        cert.witness_verified = true;
        return;
      }
    }
    for (const Realisation& r :
         sample_realisations(c, i, j, opt.witness_samples, opt.witness_seed)) {
      if (violates(r)) {
        cert.witness = r;
        cert.witness_verified = true;
        return;
      }
    }
    // Nothing verifiable: keep the closest miss as an unverified hint.
    if (exact) candidates.push_back(*exact);
    double best = -1.0;
    for (Realisation& r : candidates) {
      double score = hausdorff_to_chord(r);
      if (score > best) {
        best = score;
        cert.witness = std::move(r);
      }
    }
    cert.witness_verified = false;
  }
};

void check_indecisive(Ctx& x) {
  const auto& oi = std::get<IndecisiveRegion>(x.c.points[x.i]).options;
  const auto& oj = std::get<IndecisiveRegion>(x.c.points[x.j]).options;
  for (size_t a = 0; a < oi.size(); ++a)
    for (size_t b = 0; b < oj.size(); ++b)
      if (!x.fixed(oi[a], oj[b], "endpoint_combo", static_cast<long>(a), static_cast<long>(b)))
        return;
}

void check_disks(Ctx& x) {
  const auto& da = std::get<DiskRegion>(x.c.points[x.i]);
  const auto& db = std::get<DiskRegion>(x.c.points[x.j]);
  DiskStrip strip = build_disk_strip(da, db);

  if (strip.kind != DiskStrip::Kind::proper) {
    bool identical = strip.kind == DiskStrip::Kind::identical;
    const DiskRegion& small = identical ? da : (strip.small_first ? da : db);
    const char* kind = identical ? "identical_inclusion" : "containment";
    for (size_t k = x.i + 1; k < x.j; ++k) {
      const auto& dk = std::get<DiskRegion>(x.c.points[k]);
      double worst = dist(small.center, dk.center) + small.radius + dk.radius;
      bool ok = worst <= x.eps + tolerance();
      x.push(kind, ok, static_cast<long>(k));
      if (!ok) {
        if (x.opt.want_witness) {
          Point dir = unit_or(small.center - dk.center, {1.0, 0.0});
          Point p = small.center + small.radius * dir;
          x.exact = hausdorff_worst_interior(x.c, x.i, x.j, p, p);
        }
        return;
      }
    }
    return;
  }

  if (!x.fixed(strip.tangent[0].a, strip.tangent[0].b, "tangent_fixed", 0)) return;
  if (!x.fixed(strip.tangent[1].a, strip.tangent[1].b, "tangent_fixed", 1)) return;

  // Interior disks must intersect every endpoint chord. The escape margin is
  // the exact worst-case chord clearance, so failure comes with a concrete
  // violating chord and its radially pushed realisation.
  for (size_t k = x.i + 1; k < x.j; ++k) {
    const auto& dk = std::get<DiskRegion>(x.c.points[k]);
    ChordEscape esc = chord_escape(da.center, da.radius, db.center, db.radius, dk.center);
    bool ok = esc.margin <= (x.eps - dk.radius) + tolerance();
    x.push("chord_block", ok, static_cast<long>(k));
    if (!ok) {
      if (x.opt.want_witness) {
        Point p = da.center + da.radius * esc.dir;
        Point q = db.center + db.radius * esc.dir;
        x.exact = hausdorff_worst_interior(x.c, x.i, x.j, p, q);
      }
      return;
    }
  }
}

// Shortcut test for one pair of non-crossing convex pieces: tangents, chains,
// and a fixed check per triangulation cross edge.
bool nonintersecting_pair(Ctx& x, const std::vector<Point>& a, const std::vector<Point>& b,
                          long pair_id) {
  PolygonTangents tan = outer_tangents_polygons(a, b);
  auto edges = triangulate_between_chains(tan.chain_p, tan.chain_q, tan.tangent[0],
                                          tan.tangent[1]);
  for (size_t e = 0; e < edges.size(); ++e)
    if (!x.fixed(edges[e].first, edges[e].second, "cross_edge", pair_id,
                 static_cast<long>(e)))
      return false;
  return true;
}

std::vector<Point> segment_ring(const SegmentRegion& s) {
  if (coincident(s.a, s.b)) return {s.a};
  return {s.a, s.b};
}

void check_segments_impl(Ctx& x, const SegmentRegion& sa, const SegmentRegion& sb) {
  SegmentSplit split = split_segments_at_crossing(sa, sb);
  long pair_id = 0;
  if (split.overlap) {
    x.cert.conservative_extension = true;
    std::vector<Point> rv = segment_ring(split.shared);
    for (size_t k = x.i + 1; k < x.j; ++k)
      if (!x.shared_region(k, rv)) return;
  }
  for (const SegmentRegion& pa : split.parts_first)
    for (const SegmentRegion& pb : split.parts_last)
      if (!nonintersecting_pair(x, segment_ring(pa), segment_ring(pb), pair_id++)) return;
}

void check_segments(Ctx& x) {
  check_segments_impl(x, std::get<SegmentRegion>(x.c.points[x.i]),
                      std::get<SegmentRegion>(x.c.points[x.j]));
}

void check_polygons(Ctx& x) {
  const auto& va = std::get<PolygonRegion>(x.c.points[x.i]).vertices;
  const auto& vb = std::get<PolygonRegion>(x.c.points[x.j]).vertices;
  if (va.size() <= 2 && vb.size() <= 2) {
    // Degenerate regions behave exactly like segment regions.
    SegmentRegion sa{va.front(), va.back()};
    SegmentRegion sb{vb.front(), vb.back()};
    check_segments_impl(x, sa, sb);
    return;
  }
  std::vector<Point> shared = convex_clip(va, vb);
  if (shared.size() < 2) {
    nonintersecting_pair(x, va, vb, 0);
    return;
  }
  PolygonPartition part = partition_intersecting_polygons(va, vb);
  for (size_t k = x.i + 1; k < x.j; ++k)
    if (!x.shared_region(k, part.shared)) return;
  long pair_id = 0;
  for (const auto& pa : part.parts_first)
    for (const auto& pb : part.parts_last) {
      auto [ra, rb] = hull_repair_pair(pa, pb);
      if (!nonintersecting_pair(x, ra, rb, pair_id++)) return;
    }
}

}  // namespace

ShortcutCertificate check_shortcut(const UncertainCurve& c, size_t i, size_t j, double eps,
                                   Metric metric, const ShortcutOptions& opt) {
  if (j <= i || j >= c.size()) throw std::invalid_argument("bad shortcut indices");
  Ctx x(c, i, j, eps, metric, opt);
  if (j == i + 1) {
    x.push("adjacent", true);
    return std::move(x.cert);
  }
  switch (c.model) {
    case Model::indecisive: check_indecisive(x); break;
    case Model::disk: check_disks(x); break;
    case Model::segment: check_segments(x); break;
    case Model::polygon: check_polygons(x); break;
  }
  if (!x.cert.valid && opt.want_witness) x.finalize_witness();
  return std::move(x.cert);
}

}  // namespace uncsimp
