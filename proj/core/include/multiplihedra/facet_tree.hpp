#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "multiplihedra/tree.hpp"

namespace multiplihedra {

// Facet index l(k,s): an unpainted corolla over `span` consecutive leaves
// starting at leaf gap-1, grafted under a painted corolla. 1 < span <= n and
// 1 <= gap <= n+1-span. The facet is a product J(n+1-span) x K(span).
struct LowerFacet {
  int gap = 1;   // k, 1-based
  int span = 2;  // s, number of consecutive leaves
  int leaves = 2;

  friend bool operator==(const LowerFacet&, const LowerFacet&) = default;
};

// Facet index u(t; r_1..r_t): painted corollas of the block sizes grafted
// onto a fully painted t-corolla. Any composition of n into t >= 2 parts.
// The facet is a product K(t) x J(r_1) x ... x J(r_t).
struct UpperFacet {
  std::vector<int> blocks;

  int leaves() const;
  friend bool operator==(const UpperFacet&, const UpperFacet&) = default;
};

using FacetTree = std::variant<LowerFacet, UpperFacet>;

int facet_leaves(const FacetTree& f);
bool is_lower(const FacetTree& f);

// Compact labels "l(k,s)" and "u(t;r1,...,rt)". The label does not carry the
// total leaf count, so parsing takes it as context.
std::string facet_label(const FacetTree& f);
FacetTree parse_facet_label(std::string_view text, int leaves);  // throws std::invalid_argument

// All facet trees of the n-leaf multiplihedron: lower trees ordered by
// (span, gap), then upper trees by (block count, composition). Empty for
// n < 2; the count is n(n-1)/2 + 2^(n-1) - 1 otherwise.
std::vector<FacetTree> facet_trees(int n);

// The painted tree one collapse away from the corolla that the facet indexes.
PaintedTree realize_facet_tree(const FacetTree& f);

}  // namespace multiplihedra
