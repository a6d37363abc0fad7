#pragma once

#include <vector>

#include "multiplihedra/facet_tree.hpp"
#include "multiplihedra/rational.hpp"
#include "multiplihedra/tree.hpp"

namespace multiplihedra {

// One homogeneous equality on interior edge lengths: coeffs . lengths == 0.
struct LinearEquation {
  std::vector<Rat> coeffs;
};

// The linear system cut out by the painted branch nodes of a tree: at each
// such node, the painted interior edge lengths of adjacent subtrees must have
// equal per-leaf averages. Variables are the interior edges in canonical
// (depth-first, left-to-right) order, boxed to [0,1].
struct MetricConstraintSystem {
  std::vector<EdgeInfo> edges;              // variable i <-> edges[i]
  std::vector<LinearEquation> equations;    // one per adjacent subtree pair

  std::size_t variables() const { return edges.size(); }
};

MetricConstraintSystem constraint_system(const PaintedTree& t);

// True iff the lengths satisfy every equation exactly and lie in [0,1].
bool satisfies(const MetricConstraintSystem& sys, const std::vector<Rat>& lengths);

// #interior edges - rank(equations). Equals n-1 for every binary painted
// tree with n leaves.
int free_variable_count(const PaintedTree& t);
inline int metric_dimension(const PaintedTree& t) { return free_variable_count(t); }

// Per-edge upper bounds implied by the equations within the [0,1] box,
// obtained by interval propagation. Never excludes a feasible value; tight
// on tree-shaped systems.
std::vector<Rat> edge_upper_bounds(const MetricConstraintSystem& sys);

// A painted tree with a length in [0,1] on each interior edge, satisfying
// its constraint system. Lengths are keyed by canonical edge index.
struct MetricTree {
  PaintedTree tree;
  std::vector<Rat> lengths;
};

// The strictly feasible point from the dimension argument: every unpainted
// interior edge gets 1/2; painted edges are assigned top-down from the lowest
// painted node with denominator 2n, doubling the denominator each time a
// subtree root edge is passed: a subtree with a single painted edge puts
// p/d on it, otherwise its root edge gets p/(2d). All lengths land in
// (0, 1/2] and satisfy the system exactly.
MetricTree interior_point(const PaintedTree& binary_tree);

// Contracts every zero-length edge, all at once; the surviving lengths carry
// over and satisfy the collapsed tree's system. Idempotent.
MetricTree collapse_zero_edges(const MetricTree& m);

struct MaxLengthPoint {
  MetricTree metric;
  bool tie_broken = false;  // upper facet with several maximal blocks
};

// The boundary representative of a facet: a lower tree's single unpainted
// edge gets length 1; an upper tree's widest block edge (leftmost on ties)
// gets 1 and the equations fix the rest to r_i / r_max.
MaxLengthPoint max_length_point(const FacetTree& f);

}  // namespace multiplihedra
