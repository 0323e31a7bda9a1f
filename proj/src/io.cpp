#include "uncsimp/io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace uncsimp {

using nlohmann::json;

namespace {

Point parse_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ValidationError(path, "expected a coordinate pair [x, y]");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<Point> parse_points(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty())
    throw ValidationError(path, "expected a non-empty array of coordinate pairs");
  std::vector<Point> out;
  for (size_t k = 0; k < v.size(); ++k)
    out.push_back(parse_point(v[k], path + "/" + std::to_string(k)));
  return out;
}

const json& member(const json& obj, const char* name, const std::string& path) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ValidationError(path + "/" + name, "missing member");
  return *it;
}

json point_json(Point p) { return json::array({p.x, p.y}); }

json realisation_json(const Realisation& r) {
  json a = json::array();
  for (Point p : r) a.push_back(point_json(p));
  return a;
}

}  // namespace

ProblemInput parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ValidationError("", "document must be an object");

  ProblemInput in;
  const json& model = member(doc, "model", "");
  if (!model.is_string()) throw ValidationError("/model", "expected a string");
  std::string ms = model.get<std::string>();
  if (ms == "indecisive") in.curve.model = Model::indecisive;
  else if (ms == "disk") in.curve.model = Model::disk;
  else if (ms == "segment") in.curve.model = Model::segment;
  else if (ms == "polygon") in.curve.model = Model::polygon;
  else throw ValidationError("/model", "unknown model '" + ms + "'");

  const json& eps = member(doc, "epsilon", "");
  if (!eps.is_number()) throw ValidationError("/epsilon", "expected a number");
  in.epsilon = eps.get<double>();
  if (!std::isfinite(in.epsilon) || in.epsilon < 0.0)
    throw ValidationError("/epsilon", "must be finite and non-negative");

  if (auto it = doc.find("metric"); it != doc.end()) {
    if (!it->is_string()) throw ValidationError("/metric", "expected a string");
    std::string mt = it->get<std::string>();
    if (mt == "hausdorff") in.metric = Metric::hausdorff;
    else if (mt == "frechet") in.metric = Metric::frechet;
    else throw ValidationError("/metric", "unknown metric '" + mt + "'");
  }

  if (auto it = doc.find("tolerance"); it != doc.end()) {
    if (!it->is_number()) throw ValidationError("/tolerance", "expected a number");
    in.has_tolerance = true;
    in.tolerance_value = it->get<double>();
    if (!std::isfinite(in.tolerance_value) || in.tolerance_value < 0.0)
      throw ValidationError("/tolerance", "must be finite and non-negative");
  }

  const json& pts = member(doc, "points", "");
  if (!pts.is_array()) throw ValidationError("/points", "expected an array");
  for (size_t k = 0; k < pts.size(); ++k) {
    const json& p = pts[k];
    std::string path = "/points/" + std::to_string(k);
    if (!p.is_object()) throw ValidationError(path, "expected an object");
    switch (in.curve.model) {
      case Model::indecisive: {
        IndecisiveRegion r;
        r.options = parse_points(member(p, "options", path), path + "/options");
        in.curve.points.push_back(r);
        break;
      }
      case Model::disk: {
        DiskRegion r;
        r.center = parse_point(member(p, "c", path), path + "/c");
        const json& rad = member(p, "r", path);
        if (!rad.is_number()) throw ValidationError(path + "/r", "expected a number");
        r.radius = rad.get<double>();
        in.curve.points.push_back(r);
        break;
      }
      case Model::segment: {
        SegmentRegion r;
        r.a = parse_point(member(p, "a", path), path + "/a");
        r.b = parse_point(member(p, "b", path), path + "/b");
        in.curve.points.push_back(r);
        break;
      }
      case Model::polygon: {
        PolygonRegion r;
        r.vertices = parse_points(member(p, "vertices", path), path + "/vertices");
        in.curve.points.push_back(r);
        break;
      }
    }
  }

  if (auto issue = validate(in.curve)) throw ValidationError(issue->path, issue->message);
  return in;
}

std::string simplify_result_json(const SimplifyResult& r) {
  json out;
  json idx = json::array();
  for (size_t v : r.indices) idx.push_back(v + 1);
  out["indices"] = idx;
  out["links"] = r.links;
  out["edges_tested"] = r.edges_tested;
  out["valid_edges"] = r.valid_edges;
  return out.dump(2) + "\n";
}

std::string graph_json(const ShortcutGraph& g) {
  json out;
  out["n"] = g.n;
  json edges = json::array();
  for (size_t i = 0; i < g.n; ++i)
    for (size_t j : g.adj[i]) edges.push_back(json::array({i + 1, j + 1}));
  out["edges"] = edges;
  out["edges_tested"] = g.edges_tested;
  out["valid_edges"] = g.valid_edges;
  return out.dump(2) + "\n";
}

std::string certificate_json(const ShortcutCertificate& cert, size_t i, size_t j) {
  json out;
  out["i"] = i + 1;
  out["j"] = j + 1;
  out["valid"] = cert.valid;
  json checks = json::array();
  for (const SubCheck& sc : cert.checks) {
    json c;
    c["kind"] = sc.kind;
    c["ok"] = sc.ok;
    if (sc.region >= 0) c["region"] = sc.region + 1;
    if (sc.a >= 0) c["a"] = sc.a;
    if (sc.b >= 0) c["b"] = sc.b;
    checks.push_back(c);
  }
  out["checks"] = checks;
  out["conservative_extension"] = cert.conservative_extension;
  if (cert.witness) {
    out["witness"] = realisation_json(*cert.witness);
    out["witness_verified"] = cert.witness_verified;
  } else {
    out["witness"] = nullptr;
  }
  if (!cert.trace.empty()) out["trace"] = cert.trace;
  return out.dump(2) + "\n";
}

std::string oracle_pair_json(size_t i, size_t j, bool fast_valid, const OracleVerdict& v,
                             bool agree) {
  json out;
  out["i"] = i + 1;
  out["j"] = j + 1;
  out["fast_valid"] = fast_valid;
  out["oracle_valid"] = v.valid;
  out["exhaustive"] = v.exhaustive;
  out["realisations_checked"] = v.realisations_checked;
  out["violation"] = v.violation ? realisation_json(*v.violation) : json(nullptr);
  out["agree"] = agree;
  return out.dump();
}

std::string oracle_report_json(const std::string& report_items) {
  return "{\n\"pairs\": [" + report_items + "]\n}\n";
}

Point region_reference(const Region& r) {
  if (auto* d = std::get_if<DiskRegion>(&r)) return d->center;
  const std::vector<Point> v = region_vertices(r);
  Point s{0.0, 0.0};
  for (Point p : v) s = s + p;
  return (1.0 / static_cast<double>(v.size())) * s;
}

namespace {

void bounds(const Region& r, Point& lo, Point& hi) {
  auto take = [&](Point p, double pad) {
    lo.x = std::min(lo.x, p.x - pad);
    lo.y = std::min(lo.y, p.y - pad);
    hi.x = std::max(hi.x, p.x + pad);
    hi.y = std::max(hi.y, p.y + pad);
  };
  if (auto* d = std::get_if<DiskRegion>(&r)) {
    take(d->center, d->radius);
  } else {
    for (Point p : region_vertices(r)) take(p, 0.0);
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string render_svg(const UncertainCurve& c, const std::vector<size_t>& path) {
  Point lo{1e300, 1e300}, hi{-1e300, -1e300};
  for (const Region& r : c.points) bounds(r, lo, hi);
  double span = std::max({hi.x - lo.x, hi.y - lo.y, 1.0});
  double margin = 0.05 * span;
  lo = lo - Point{margin, margin};
  hi = hi + Point{margin, margin};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(lo.x) << " "
      << fmt(lo.y) << " " << fmt(hi.x - lo.x) << " " << fmt(hi.y - lo.y)
      << "\" width=\"800\" height=\"" << fmt(800.0 * (hi.y - lo.y) / (hi.x - lo.x)) << "\">\n";
  svg << "<g transform=\"translate(0," << fmt(lo.y + hi.y) << ") scale(1,-1)\">\n";
  double stroke = 0.004 * span;

  for (const Region& r : c.points) {
    const char* style = "fill=\"#4a90d955\" stroke=\"#2a5d8f\"";
    if (auto* d = std::get_if<DiskRegion>(&r)) {
      svg << "<circle cx=\"" << fmt(d->center.x) << "\" cy=\"" << fmt(d->center.y)
          << "\" r=\"" << fmt(std::max(d->radius, 0.5 * stroke)) << "\" " << style
          << " stroke-width=\"" << fmt(stroke) << "\"/>\n";
    } else if (auto* s = std::get_if<SegmentRegion>(&r)) {
      svg << "<path d=\"M " << fmt(s->a.x) << " " << fmt(s->a.y) << " L " << fmt(s->b.x)
          << " " << fmt(s->b.y) << "\" " << style << " stroke-width=\"" << fmt(2.0 * stroke)
          << "\" stroke-linecap=\"round\"/>\n";
    } else if (auto* ind = std::get_if<IndecisiveRegion>(&r)) {
      svg << "<path d=\"";
      for (Point p : ind->options)
        svg << "M " << fmt(p.x + stroke) << " " << fmt(p.y) << " a " << fmt(stroke) << " "
            << fmt(stroke) << " 0 1 0 " << fmt(-2.0 * stroke) << " 0 a " << fmt(stroke) << " "
            << fmt(stroke) << " 0 1 0 " << fmt(2.0 * stroke) << " 0 ";
      svg << "\" " << style << "/>\n";
    } else {
      const auto& v = std::get<PolygonRegion>(r).vertices;
      svg << "<path d=\"M " << fmt(v[0].x) << " " << fmt(v[0].y);
      for (size_t k = 1; k < v.size(); ++k) svg << " L " << fmt(v[k].x) << " " << fmt(v[k].y);
      svg << " Z\" " << style << " stroke-width=\"" << fmt(stroke) << "\"/>\n";
    }
  }

  if (!path.empty()) {
    svg << "<polyline fill=\"none\" stroke=\"#d9544a\" stroke-width=\"" << fmt(1.5 * stroke)
        << "\" points=\"";
    for (size_t v : path) {
      Point p = region_reference(c.points[v]);
      svg << fmt(p.x) << "," << fmt(p.y) << " ";
    }
    svg << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace uncsimp
