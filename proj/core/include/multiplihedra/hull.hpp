#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multiplihedra/facet_tree.hpp"
#include "multiplihedra/rational.hpp"
#include "multiplihedra/realization.hpp"

namespace multiplihedra {

// One facet found by the hull oracle. Canonical form: first nonzero
// coefficient has absolute value 1 and every input point satisfies
// coeffs . x <= rhs.
struct HullFacet {
  std::vector<Rat> coeffs;
  Rat rhs;
  std::vector<int> incident;  // indices of points on the plane, ascending
};

struct HullResult {
  int ambient_dim = 0;
  int affine_dim = 0;
  // When the input is not full-dimensional, the hull is computed inside the
  // affine span, re-coordinatized by the listed coordinate directions.
  bool projected = false;
  std::vector<int> span_coordinates;
  std::vector<HullFacet> facets;  // sorted by (coeffs, rhs)
};

// Brute-force facet enumeration in exact arithmetic: every d-subset of the
// points spans a candidate hyperplane, kept iff all points lie on one side.
// Independent of the predicted facet structure. `seeds` (optional) prunes the
// subset scan: each seed is first verified supporting by the same
// one-sidedness test, and subsets inside a verified seed's incidence set are
// skipped since they regenerate that plane.
HullResult brute_force_hull(const std::vector<Point>& points,
                            const std::vector<Hyperplane>* seeds = nullptr);

// Everything verify_realization() checked, with the failures it found.
struct HullReport {
  int n = 0;
  Rat q;
  Weights weights;
  long long vertex_count = 0;
  long long facet_count = 0;
  int affine_dim = 0;
  bool brute_force_used = false;
  bool pass = false;

  struct FacetCheck {
    FacetTree facet;
    Hyperplane plane;
    std::vector<int> incident;  // vertices on the plane
    bool supporting = false;
    bool incidence_matches_refinement = false;
    bool incidence_count_matches_product = false;
  };
  std::vector<FacetCheck> facets;
  std::vector<bool> extremal;            // per point: on >= n-1 facets of full normal rank
  std::vector<std::string> missing;      // predicted facets the oracle did not find
  std::vector<std::string> extra;        // oracle facets not predicted
  std::vector<std::string> problems;     // human-readable failure list
};

// Checks that the realized point set is the predicted polytope:
//  (a) each facet hyperplane is supporting and its incidence set is exactly
//      the set of binary refinements of the facet tree;
//  (b) incidence counts match the product structure a_r * C(s-1) resp.
//      C(t-1) * prod a_{r_i};
//  (c) every point lies on enough facets with spanning normals to be a
//      vertex, and the affine span has dimension n-1;
//  (d) with brute_force set, the oracle's facet list equals the predicted
//      hyperplanes exactly.
HullReport verify_realization(int n, const Rat& q, const Weights& w,
                              bool brute_force = false);

// Face counts by dimension (0 .. n-1, top cell included), from the painted
// tree enumeration: a face's dimension is n-1 minus the free variable count
// of its metric system.
std::vector<long long> f_vector(int n);

}  // namespace multiplihedra
