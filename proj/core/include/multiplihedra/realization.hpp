#pragma once

#include <optional>
#include <vector>

#include "multiplihedra/facet_tree.hpp"
#include "multiplihedra/rational.hpp"
#include "multiplihedra/tree.hpp"

namespace multiplihedra {

// Vertex coordinates of a binary painted tree with n leaves, one coordinate
// per branch node numbered left to right (node i sits between leaves i-1 and
// i). The coordinate is the product of the leaf counts of the node's two
// subtrees, scaled by q when the node is unpainted. Requires q in (0,1);
// boundary values go through quotient_points().
Point coordinates(const PaintedTree& t, const Rat& q);

// Weighted variant: leaf counts are replaced by sums of positive integer leaf
// weights. Unit weights recover coordinates(). Throws on a nonpositive
// weight, wrong weight count, or q outside (0,1).
Point coordinates_weighted(const PaintedTree& t, const Rat& q, const Weights& w);

// Same computation with no range check on q; used for the q in {0,1}
// degenerations.
Point coordinates_weighted_unchecked(const PaintedTree& t, const Rat& q, const Weights& w);

// Coordinates of every tree in enumerate_binary(n), in canonical order.
std::vector<Point> realize_all(int n, const Rat& q, const Weights& w);

// Associahedron vertices from unpainted binary trees (product of the two
// subtree weights at every node, no scaling), canonical tree order. The
// independent reference for the q -> 1 degeneration.
std::vector<Point> loday_points(int n, const Weights& w);

// Which side of the hyperplane the point set lives on. `below` means the
// plane bounds the points from below: coeffs . x >= rhs for every vertex.
enum class Bound { below, above };

struct Hyperplane {
  std::vector<Rat> coeffs;  // 0/1 indicator pattern for facet planes
  Rat rhs;
  Bound bound = Bound::below;
  std::optional<FacetTree> facet;

  Rat eval(const Point& p) const;
  bool contains(const Point& p) const { return eval(p) == rhs; }
  // True when p is on the correct side (or on the plane).
  bool admits(const Point& p) const;
};

// The supporting hyperplane of a facet tree.
//   l(k,s):  x_k + ... + x_{k+s-2} = q * sum_{k-1 <= i < j <= k+s-2} w_i w_j
//            (bounds below),
//   u(t;r):  x_{r_1} + x_{r_1+r_2} + ... + x_{r_1+..+r_{t-1}}
//              = sum_{1 <= i < j <= t} R_i R_j  with R_i the i-th block's
//            weight sum (bounds above).
Hyperplane facet_hyperplane(const FacetTree& f, const Rat& q, const Weights& w);

}  // namespace multiplihedra
