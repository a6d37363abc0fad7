#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiplihedra/hull.hpp"
#include "multiplihedra/rational.hpp"
#include "multiplihedra/realization.hpp"

namespace multiplihedra {

struct LabeledPoint {
  std::string tree;  // canonical tree string
  Point coords;
};

// Everything the exporters need, with points in canonical enumeration order.
struct ExportBundle {
  int n = 0;
  Rat q;
  Weights weights;
  std::vector<LabeledPoint> points;
  std::vector<Hyperplane> hyperplanes;
  std::optional<HullReport> hull;
};

ExportBundle make_bundle(int n, const Rat& q, const Weights& w, bool with_hull);

// polymake point section: a "POINTS" header line, then one row per point with
// a leading homogenizing 1 and the coordinates as reduced rationals,
// space-separated, newline-terminated, in canonical point order.
std::string export_polymake(const ExportBundle& b);

// Geomview nOFF with explicit dimension. Vertices are printed as decimals
// with 17 significant digits (exact values live in the JSON export). Faces
// are emitted only in ambient dimension <= 3 and only when hull data is
// present: the facet polygons for 3-d, the single polygon for 2-d.
std::string export_off(const ExportBundle& b);

// JSON document, schema "multiplihedra/1". Rationals are strings; importing
// and re-exporting reproduces the document byte for byte.
std::string export_json(const ExportBundle& b);
ExportBundle import_json(std::string_view text);  // throws std::invalid_argument

struct QuotientResult {
  std::vector<Point> distinct;  // deduplicated, sorted lexicographically
  std::size_t raw_count = 0;    // number of binary trees
};

// Point set at a boundary value q in {0,1}, deduplicated by exact equality.
// At q=1 the distinct points are the (weighted) associahedron vertices,
// C(n-1) of them; at q=0 the count is reported without any further claim.
QuotientResult quotient_points(int n, const Rat& q, const Weights& w);

}  // namespace multiplihedra
