// Command-line front end: counting, enumeration, coordinates, facet data,
// realization verification, metric trees, and file exports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "multiplihedra/counting.hpp"
#include "multiplihedra/enumeration.hpp"
#include "multiplihedra/export.hpp"
#include "multiplihedra/hull.hpp"
#include "multiplihedra/metric.hpp"
#include "multiplihedra/rational.hpp"
#include "multiplihedra/realization.hpp"
#include "multiplihedra/refinement.hpp"

namespace m = multiplihedra;

namespace {

struct CommonOpts {
  int n = 2;
  std::string q_text = "1/2";
  std::string weights_text;
  bool quotient = false;
};

m::Rat parsed_q(const CommonOpts& o) { return m::parse_rational(o.q_text); }

m::Weights parsed_weights(const CommonOpts& o) {
  if (o.weights_text.empty()) return m::unit_weights(o.n);
  m::Weights w;
  std::string part;
  std::istringstream in(o.weights_text);
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    long long v = std::stoll(part, &used);
    if (used != part.size()) throw std::invalid_argument("malformed weight '" + part + "'");
    w.push_back(v);
  }
  if (static_cast<int>(w.size()) != o.n)
    throw std::invalid_argument("expected " + std::to_string(o.n) + " weights");
  for (long long v : w)
    if (v <= 0) throw std::invalid_argument("weights must be positive");
  return w;
}

// Boundary q is only legal when the caller asked for quotient-mode dedup.
void check_q_policy(const m::Rat& q, bool quotient) {
  if (q < 0 || q > 1) throw std::invalid_argument("q must lie in [0,1]");
  if ((q == 0 || q == 1) && !quotient)
    throw std::invalid_argument(
        "q=0 and q=1 collapse points; pass --quotient to deduplicate at the boundary");
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_q = true) {
  cmd->add_option("n", o.n, "number of leaves")->required();
  if (with_q) {
    cmd->add_option("--q", o.q_text, "scale factor for unpainted nodes (rational, default 1/2)");
    cmd->add_option("--weights", o.weights_text, "comma-separated positive integer leaf weights");
    cmd->add_flag("--quotient", o.quotient, "allow q in {0,1} and deduplicate the point set");
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

int run_quotient(const CommonOpts& o, const m::Rat& q, const m::Weights& w) {
  const auto result = m::quotient_points(o.n, q, w);
  for (const m::Point& p : result.distinct) std::cout << m::format_point(p) << "\n";
  std::cout << result.distinct.size() << " distinct points (" << result.raw_count
            << " trees) at q=" << m::format_rational(q) << "\n";
  if (q == 1) {
    const m::Int expected = m::catalan(o.n - 1);
    if (m::Int(result.distinct.size()) != expected) {
      std::cerr << "error: expected C(" << o.n - 1 << ") = " << expected
                << " distinct points at q=1\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convex realizations of the multiplihedra"};
  app.require_subcommand(1);

  CommonOpts count_o, enum_o, coords_o, facets_o, verify_o, metric_o, export_o;

  auto* cmd_count = app.add_subcommand("count", "vertex and facet counts");
  add_common(cmd_count, count_o, false);

  auto* cmd_enum = app.add_subcommand("enumerate", "list binary painted trees");
  bool enum_faces = false;
  add_common(cmd_enum, enum_o, false);
  cmd_enum->add_flag("--faces", enum_faces, "list all painted trees (faces), not just vertices");

  auto* cmd_coords = app.add_subcommand("coords", "vertex coordinates");
  add_common(cmd_coords, coords_o);

  auto* cmd_facets = app.add_subcommand("facets", "facet trees and hyperplanes");
  add_common(cmd_facets, facets_o);

  auto* cmd_verify = app.add_subcommand("verify", "verify the realization");
  bool brute = false;
  std::string verify_json;
  add_common(cmd_verify, verify_o);
  cmd_verify->add_flag("--brute-force", brute, "also run the subset-scan hull oracle");
  cmd_verify->add_option("--json", verify_json, "write the verification report bundle to a file");

  auto* cmd_metric = app.add_subcommand("metric", "edge-length constraint systems");
  std::string metric_tree;
  add_common(cmd_metric, metric_o, false);
  cmd_metric->add_option("--tree", metric_tree, "restrict to one tree (canonical string)");

  auto* cmd_export = app.add_subcommand("export", "write the point set to a file format");
  std::string format = "polymake", out_path;
  bool with_hull = false;
  add_common(cmd_export, export_o);
  cmd_export->add_option("--format", format, "polymake | off | json")
      ->check(CLI::IsMember({"polymake", "off", "json"}));
  cmd_export->add_option("--output,-o", out_path, "output file (default stdout)");
  cmd_export->add_flag("--with-hull", with_hull, "include facet incidence data");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_count) {
      std::cout << m::vertex_count_recursive(count_o.n) << "\n";
      return 0;
    }

    if (*cmd_enum) {
      const auto trees =
          enum_faces ? m::enumerate_faces(enum_o.n) : m::enumerate_binary(enum_o.n);
      for (const m::PaintedTree& t : trees) std::cout << t.str() << "\n";
      return 0;
    }

    if (*cmd_coords) {
      const m::Rat q = parsed_q(coords_o);
      const m::Weights w = parsed_weights(coords_o);
      check_q_policy(q, coords_o.quotient);
      if (q == 0 || q == 1) return run_quotient(coords_o, q, w);
      for (const m::PaintedTree& t : m::enumerate_binary(coords_o.n))
        std::cout << t.str() << "  "
                  << m::format_point(m::coordinates_weighted(t, q, w)) << "\n";
      return 0;
    }

    if (*cmd_facets) {
      const m::Rat q = parsed_q(facets_o);
      const m::Weights w = parsed_weights(facets_o);
      for (const m::FacetTree& f : m::facet_trees(facets_o.n)) {
        const m::Hyperplane h = m::facet_hyperplane(f, q, w);
        std::cout << m::facet_label(f) << "  tree "
                  << m::realize_facet_tree(f).str() << "  plane";
        for (std::size_t i = 0; i < h.coeffs.size(); ++i)
          if (!h.coeffs[i].is_zero()) std::cout << " +x" << i + 1;
        std::cout << (h.bound == m::Bound::below ? " >= " : " <= ")
                  << m::format_rational(h.rhs) << "\n";
      }
      std::cout << m::facet_trees(facets_o.n).size() << " facets ("
                << m::facet_count(facets_o.n) << " by the count formula)\n";
      return 0;
    }

    if (*cmd_verify) {
      const m::Rat q = parsed_q(verify_o);
      const m::Weights w = parsed_weights(verify_o);
      check_q_policy(q, false);
      const m::HullReport report = m::verify_realization(verify_o.n, q, w, brute);
      if (!verify_json.empty()) {
        m::ExportBundle b = m::make_bundle(verify_o.n, q, w, false);
        b.hull = report;
        write_output(m::export_json(b), verify_json);
      }
      if (report.pass) {
        std::cout << report.vertex_count << " vertices, " << report.facet_count
                  << " facets, OK\n";
        return 0;
      }
      std::cout << report.vertex_count << " vertices, " << report.facet_count
                << " facets, FAILED\n";
      for (const std::string& p : report.problems) std::cout << "  " << p << "\n";
      return 1;
    }

    if (*cmd_metric) {
      std::vector<m::PaintedTree> trees;
      if (!metric_tree.empty()) {
        trees.push_back(m::PaintedTree::parse(metric_tree));
        if (trees[0].leaves() != metric_o.n)
          throw std::invalid_argument("tree has wrong leaf count");
      } else {
        trees = m::enumerate_binary(metric_o.n);
      }
      for (const m::PaintedTree& t : trees) {
        const auto sys = m::constraint_system(t);
        std::cout << t.str() << "\n  " << sys.variables() << " interior edges, "
                  << sys.equations.size() << " equations, dimension "
                  << m::free_variable_count(t) << "\n";
        for (const auto& eq : sys.equations) {
          std::cout << "  0 =";
          for (std::size_t i = 0; i < eq.coeffs.size(); ++i)
            if (!eq.coeffs[i].is_zero())
              std::cout << " " << (eq.coeffs[i] > 0 ? "+" : "")
                        << m::format_rational(eq.coeffs[i]) << "*e" << i;
          std::cout << "\n";
        }
        if (t.is_binary()) {
          const m::MetricTree p = m::interior_point(t);
          std::cout << "  interior point:";
          for (const m::Rat& l : p.lengths) std::cout << " " << m::format_rational(l);
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*cmd_export) {
      const m::Rat q = parsed_q(export_o);
      const m::Weights w = parsed_weights(export_o);
      check_q_policy(q, export_o.quotient);
      if (q == 0 || q == 1) return run_quotient(export_o, q, w);
      const bool need_hull = with_hull || format == "off";
      const m::ExportBundle b = m::make_bundle(export_o.n, q, w, need_hull);
      std::string text;
      if (format == "polymake") text = m::export_polymake(b);
      else if (format == "off") text = m::export_off(b);
      else text = m::export_json(b);
      write_output(text, out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
