#include "multiplihedra/refinement.hpp"

#include <stdexcept>

namespace multiplihedra {

bool refines(const PaintedTree& t, const PaintedTree& coarser) {
  if (t.leaves() != coarser.leaves())
    throw std::invalid_argument("refines: leaf counts differ");
  const auto edges = interior_edges(t.root());
  const auto target_edges = interior_edges(coarser.root());
  const std::size_t e = edges.size();
  if (target_edges.size() > e) return false;
  const std::size_t must_drop = e - target_edges.size();
  if (e >= 8 * sizeof(unsigned long long))
    throw std::invalid_argument("refines: tree too large for exhaustive search");

  std::vector<bool> drop(e);
  for (unsigned long long mask = 0; mask < (1ull << e); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != must_drop) continue;
    for (std::size_t i = 0; i < e; ++i) drop[i] = (mask >> i) & 1ull;
    if (contract(t.root(), drop) == coarser.root()) return true;
  }
  return false;
}

namespace {

bool has_edge(const std::vector<EdgeInfo>& edges, bool painted, int lo, int hi) {
  for (const EdgeInfo& e : edges)
    if (e.painted == painted && e.leaf_lo == lo && e.leaf_hi == hi) return true;
  return false;
}

}  // namespace

bool refines_facet(const PaintedTree& t, const FacetTree& f) {
  if (t.leaves() != facet_leaves(f))
    throw std::invalid_argument("refines_facet: leaf counts differ");
  const auto edges = interior_edges(t.root());
  if (const auto* low = std::get_if<LowerFacet>(&f)) {
    // Everything outside the unpainted span edge collapses into the bottom
    // color-change node, so that one edge is the whole certificate.
    return has_edge(edges, false, low->gap - 1, low->gap + low->span - 2);
  }
  const auto& up = std::get<UpperFacet>(f);
  int lo = 0;
  for (int r : up.blocks) {
    if (!has_edge(edges, true, lo, lo + r - 1)) return false;
    lo += r;
  }
  return true;
}

}  // namespace multiplihedra
