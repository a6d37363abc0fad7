#pragma once

#include "multiplihedra/rational.hpp"

namespace multiplihedra {

Int binomial(int n, int k);
Int catalan(int n);  // C(n) = binom(2n, n) / (n+1)

// Vertex count of the n-th multiplihedron by the recursion
//   a_n = C(n-1) + sum_{i=1}^{n-1} a_i a_{n-i},   a_0 = 0.
// The C(n-1) term counts the trees with only the root painted; the sum splits
// over the leaf counts of the two subtrees of a painted lowest node.
Int vertex_count_recursive(int n);

// The same count as a Catalan transform:
//   a_n = (1/n) sum_{k=1}^{n} binom(2n-k-1, n-1) binom(2k-2, k-1),  a_0 = 0.
Int vertex_count_closed(int n);

// Facet count n(n-1)/2 + 2^(n-1) - 1; zero for n < 2.
Int facet_count(int n);

}  // namespace multiplihedra
