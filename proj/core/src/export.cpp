#include "multiplihedra/export.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "multiplihedra/counting.hpp"
#include "multiplihedra/enumeration.hpp"

namespace multiplihedra {

using nlohmann::json;

ExportBundle make_bundle(int n, const Rat& q, const Weights& w, bool with_hull) {
  if (n < 1) throw std::invalid_argument("make_bundle: need n >= 1");
  ExportBundle b;
  b.n = n;
  b.q = q;
  b.weights = w;
  for (const PaintedTree& t : enumerate_binary(n))
    b.points.push_back({t.str(), coordinates_weighted_unchecked(t, q, w)});
  for (const FacetTree& f : facet_trees(n))
    b.hyperplanes.push_back(facet_hyperplane(f, q, w));
  if (with_hull && n >= 2) b.hull = verify_realization(n, q, w, false);
  return b;
}

std::string export_polymake(const ExportBundle& b) {
  std::string out = "POINTS\n";
  for (const LabeledPoint& p : b.points) {
    out += "1";
    for (const Rat& x : p.coords) {
      out += " ";
      out += format_rational(x);
    }
    out += "\n";
  }
  return out;
}

namespace {

std::string decimal17(const Rat& x) {
  std::ostringstream out;
  out << std::setprecision(17) << x.convert_to<double>();
  return out.str();
}

// Cyclic order of a polygon's vertices: angle around the centroid inside the
// facet plane. Display only, so doubles are fine here.
std::vector<int> polygon_order(const std::vector<Point>& pts, const std::vector<int>& incident,
                               const std::vector<Rat>& normal) {
  const std::size_t dim = pts[0].size();
  std::vector<double> c(dim, 0.0);
  for (int i : incident)
    for (std::size_t j = 0; j < dim; ++j)
      c[j] += pts[static_cast<std::size_t>(i)][j].convert_to<double>() /
              static_cast<double>(incident.size());
  std::vector<double> u(dim, 0.0), v(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j)
    u[j] = pts[static_cast<std::size_t>(incident[0])][j].convert_to<double>() - c[j];
  if (dim == 2) {
    v = {-u[1], u[0]};
  } else {
    // dim == 3: v = normal x u
    std::vector<double> a(3);
    for (std::size_t j = 0; j < 3; ++j) a[j] = normal[j].convert_to<double>();
    v = {a[1] * u[2] - a[2] * u[1], a[2] * u[0] - a[0] * u[2], a[0] * u[1] - a[1] * u[0]};
  }
  std::vector<std::pair<double, int>> keyed;
  for (int i : incident) {
    double du = 0, dv = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double x = pts[static_cast<std::size_t>(i)][j].convert_to<double>() - c[j];
      du += x * u[j];
      dv += x * v[j];
    }
    keyed.emplace_back(std::atan2(dv, du), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& [angle, i] : keyed) out.push_back(i);
  return out;
}

}  // namespace

std::string export_off(const ExportBundle& b) {
  const int dim = b.n - 1;
  std::vector<Point> pts;
  for (const LabeledPoint& p : b.points) pts.push_back(p.coords);

  std::vector<std::vector<int>> faces;
  if (b.hull && !b.hull->facets.empty()) {
    if (dim == 3) {
      for (const auto& check : b.hull->facets)
        faces.push_back(polygon_order(pts, check.incident, check.plane.coeffs));
    } else if (dim == 2) {
      std::vector<int> all(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
      faces.push_back(polygon_order(pts, all, {}));
    }
  }

  std::ostringstream out;
  out << "nOFF\n" << dim << "\n";
  out << pts.size() << " " << faces.size() << " 0\n";
  for (const Point& p : pts) {
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << decimal17(p[j]);
    if (p.empty()) out << "0";  // dimension-0 vertex still needs a row
    out << "\n";
  }
  for (const auto& face : faces) {
    out << face.size();
    for (int i : face) out << " " << i;
    out << "\n";
  }
  return out.str();
}

namespace {

json rational_list(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(format_rational(x));
  return out;
}

std::vector<Rat> parse_rational_list(const json& j) {
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

json hyperplane_to_json(const Hyperplane& h, int n) {
  json out;
  if (h.facet) out["facet"] = facet_label(*h.facet);
  out["bound"] = h.bound == Bound::below ? "below" : "above";
  out["coeffs"] = rational_list(h.coeffs);
  out["rhs"] = format_rational(h.rhs);
  (void)n;
  return out;
}

Hyperplane hyperplane_from_json(const json& j, int n) {
  Hyperplane h;
  h.coeffs = parse_rational_list(j.at("coeffs"));
  h.rhs = parse_rational(j.at("rhs").get<std::string>());
  h.bound = j.at("bound").get<std::string>() == "below" ? Bound::below : Bound::above;
  if (j.contains("facet"))
    h.facet = parse_facet_label(j.at("facet").get<std::string>(), n);
  return h;
}

}  // namespace

std::string export_json(const ExportBundle& b) {
  json doc;
  doc["schema"] = "multiplihedra/1";
  doc["n"] = b.n;
  doc["q"] = format_rational(b.q);
  doc["weights"] = b.weights;
  json points = json::array();
  for (const LabeledPoint& p : b.points) {
    json jp;
    jp["tree"] = p.tree;
    jp["coords"] = rational_list(p.coords);
    points.push_back(std::move(jp));
  }
  doc["points"] = std::move(points);
  json planes = json::array();
  for (const Hyperplane& h : b.hyperplanes) planes.push_back(hyperplane_to_json(h, b.n));
  doc["hyperplanes"] = std::move(planes);
  if (b.hull) {
    const HullReport& r = *b.hull;
    json hull;
    hull["pass"] = r.pass;
    hull["affine_dim"] = r.affine_dim;
    hull["vertex_count"] = r.vertex_count;
    hull["facet_count"] = r.facet_count;
    hull["brute_force"] = r.brute_force_used;
    json checks = json::array();
    for (const auto& c : r.facets) {
      json jc;
      jc["facet"] = facet_label(c.facet);
      jc["incident"] = c.incident;
      jc["supporting"] = c.supporting;
      jc["matches_refinement"] = c.incidence_matches_refinement;
      jc["matches_product"] = c.incidence_count_matches_product;
      checks.push_back(std::move(jc));
    }
    hull["facets"] = std::move(checks);
    hull["extremal"] = r.extremal;
    hull["missing"] = r.missing;
    hull["extra"] = r.extra;
    hull["problems"] = r.problems;
    doc["hull"] = std::move(hull);
  }
  return doc.dump(2) + "\n";
}

ExportBundle import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad bundle JSON: ") + e.what());
  }
  if (doc.value("schema", "") != "multiplihedra/1")
    throw std::invalid_argument("unsupported bundle schema");
  ExportBundle b;
  b.n = doc.at("n").get<int>();
  b.q = parse_rational(doc.at("q").get<std::string>());
  b.weights = doc.at("weights").get<Weights>();
  for (const auto& jp : doc.at("points"))
    b.points.push_back(
        {jp.at("tree").get<std::string>(), parse_rational_list(jp.at("coords"))});
  for (const auto& jh : doc.at("hyperplanes"))
    b.hyperplanes.push_back(hyperplane_from_json(jh, b.n));
  if (doc.contains("hull")) {
    const json& hull = doc.at("hull");
    HullReport r;
    r.n = b.n;
    r.q = b.q;
    r.weights = b.weights;
    r.pass = hull.at("pass").get<bool>();
    r.affine_dim = hull.at("affine_dim").get<int>();
    r.vertex_count = hull.at("vertex_count").get<long long>();
    r.facet_count = hull.at("facet_count").get<long long>();
    r.brute_force_used = hull.at("brute_force").get<bool>();
    for (const auto& jc : hull.at("facets")) {
      HullReport::FacetCheck c;
      c.facet = parse_facet_label(jc.at("facet").get<std::string>(), b.n);
      c.plane = facet_hyperplane(c.facet, b.q, b.weights);
      c.incident = jc.at("incident").get<std::vector<int>>();
      c.supporting = jc.at("supporting").get<bool>();
      c.incidence_matches_refinement = jc.at("matches_refinement").get<bool>();
      c.incidence_count_matches_product = jc.at("matches_product").get<bool>();
      r.facets.push_back(std::move(c));
    }
    r.extremal = hull.at("extremal").get<std::vector<bool>>();
    r.missing = hull.at("missing").get<std::vector<std::string>>();
    r.extra = hull.at("extra").get<std::vector<std::string>>();
    r.problems = hull.at("problems").get<std::vector<std::string>>();
    b.hull = std::move(r);
  }
  return b;
}

QuotientResult quotient_points(int n, const Rat& q, const Weights& w) {
  if (q != 0 && q != 1)
    throw std::invalid_argument("quotient_points: q must be 0 or 1");
  QuotientResult out;
  std::set<Point> seen;
  for (const PaintedTree& t : enumerate_binary(n)) {
    seen.insert(coordinates_weighted_unchecked(t, q, w));
    ++out.raw_count;
  }
  out.distinct.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace multiplihedra
