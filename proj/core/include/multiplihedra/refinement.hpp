#pragma once

#include "multiplihedra/facet_tree.hpp"
#include "multiplihedra/tree.hpp"

namespace multiplihedra {

// True iff `coarser` results from collapsing some (possibly empty) set of
// interior edges of `t`. Exhaustive over collapse sets, so exponential in
// the interior edge count; fine at desk scale. Reflexive; a partial order.
// Throws std::invalid_argument on leaf-count mismatch.
bool refines(const PaintedTree& t, const PaintedTree& coarser);

// Certificate-based refinement test against a facet tree, linear time:
//  - lower l(k,s): t has an unpainted interior edge spanning exactly leaves
//    k-1 .. k+s-2 (everything else collapses into the corolla node);
//  - upper u(t;r): t has, for every block, a painted interior edge spanning
//    exactly that block of leaves.
// Agrees with refines(t, realize_facet_tree(f)); tests pin this down.
bool refines_facet(const PaintedTree& t, const FacetTree& f);

}  // namespace multiplihedra
