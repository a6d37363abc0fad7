#include "multiplihedra/metric.hpp"

#include <algorithm>
#include <stdexcept>

#include "multiplihedra/linalg.hpp"
#include "multiplihedra/refinement.hpp"

namespace multiplihedra {

namespace {

struct SubtreeInfo {
  int leaves = 0;
  std::vector<int> painted_edges;  // canonical indices, this subtree only
};

// DFS matching the canonical interior-edge order; emits equations at painted
// branch nodes.
SubtreeInfo scan(const TreeNode& v, bool is_top, int& next_index,
                 std::vector<LinearEquation>& equations, std::size_t total_edges) {
  SubtreeInfo info;
  int my_edge = -1;
  if (!is_top && !v.leaf()) {
    my_edge = next_index++;
    if (v.edge == Paint::painted) info.painted_edges.push_back(my_edge);
  }
  if (v.leaf()) {
    info.leaves = 1;
    return info;
  }
  std::vector<SubtreeInfo> child_info;
  for (const TreeNode& c : v.children) {
    child_info.push_back(scan(c, false, next_index, equations, total_edges));
    info.leaves += child_info.back().leaves;
    for (int e : child_info.back().painted_edges) info.painted_edges.push_back(e);
  }
  if (classify(v) == NodeKind::painted_branch) {
    // Per adjacent subtree pair: sums of painted lengths have equal per-leaf
    // averages. Stored cleared of denominators:
    //   p_{i+1} * S_i - p_i * S_{i+1} = 0.
    for (std::size_t i = 0; i + 1 < child_info.size(); ++i) {
      LinearEquation eq;
      eq.coeffs.assign(total_edges, Rat(0));
      const auto& a = child_info[i];
      const auto& b = child_info[i + 1];
      for (int e : a.painted_edges) eq.coeffs[static_cast<std::size_t>(e)] += b.leaves;
      for (int e : b.painted_edges) eq.coeffs[static_cast<std::size_t>(e)] -= a.leaves;
      equations.push_back(std::move(eq));
    }
  }
  return info;
}

}  // namespace

MetricConstraintSystem constraint_system(const PaintedTree& t) {
  MetricConstraintSystem sys;
  sys.edges = interior_edges(t.root());
  int next = 0;
  scan(t.root(), true, next, sys.equations, sys.edges.size());
  return sys;
}

bool satisfies(const MetricConstraintSystem& sys, const std::vector<Rat>& lengths) {
  if (lengths.size() != sys.variables()) return false;
  for (const Rat& l : lengths)
    if (l < 0 || l > 1) return false;
  for (const LinearEquation& eq : sys.equations) {
    Rat acc = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i)
      if (!eq.coeffs[i].is_zero()) acc += eq.coeffs[i] * lengths[i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

int free_variable_count(const PaintedTree& t) {
  const MetricConstraintSystem sys = constraint_system(t);
  if (sys.equations.empty()) return static_cast<int>(sys.variables());
  RatMatrix m;
  for (const LinearEquation& eq : sys.equations) m.push_back(eq.coeffs);
  return static_cast<int>(sys.variables()) - matrix_rank(std::move(m));
}

std::vector<Rat> edge_upper_bounds(const MetricConstraintSystem& sys) {
  std::vector<Rat> ub(sys.variables(), Rat(1));
  // Interval propagation: from c_j x_j = -sum c_i x_i, the box maximum of the
  // right side over opposite-signed terms bounds x_j. Tree systems reach a
  // fixpoint quickly; the round cap keeps termination unconditional.
  const std::size_t rounds = sys.variables() + 2;
  for (std::size_t round = 0; round < rounds; ++round) {
    bool changed = false;
    for (const LinearEquation& eq : sys.equations) {
      for (std::size_t j = 0; j < ub.size(); ++j) {
        if (eq.coeffs[j].is_zero()) continue;
        Rat best = 0;
        for (std::size_t i = 0; i < ub.size(); ++i) {
          if (i == j || eq.coeffs[i].is_zero()) continue;
          const Rat ratio = -eq.coeffs[i] / eq.coeffs[j];
          if (ratio > 0) best += ratio * ub[i];
        }
        if (best < ub[j]) {
          ub[j] = best;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return ub;
}

namespace {

// Advances the canonical edge counter across a whole subtree.
void skip_edges(const TreeNode& v, bool is_top, int& next) {
  if (!is_top && !v.leaf()) ++next;
  for (const TreeNode& c : v.children) skip_edges(c, false, next);
}

// v is a painted branch node whose subtrees get their painted lengths from
// the logical denominator d: a single-painted-edge subtree puts p/d on that
// edge, a deeper one puts p/(2d) on its root edge and recurses with 2d.
void assign_painted(const TreeNode& v, const Int& d, int& next, std::vector<Rat>& len) {
  for (const TreeNode& c : v.children) {
    const int idx = next;
    const Int p = leaf_count(c);
    if (classify(c) == NodeKind::color_change) {
      len[static_cast<std::size_t>(idx)] = Rat(p, d);
      skip_edges(c, false, next);
    } else {
      len[static_cast<std::size_t>(idx)] = Rat(p, 2 * d);
      ++next;
      assign_painted(c, 2 * d, next, len);
    }
  }
}

}  // namespace

MetricTree interior_point(const PaintedTree& binary_tree) {
  if (!binary_tree.is_binary())
    throw std::invalid_argument("interior_point expects a binary painted tree");
  const auto edges = interior_edges(binary_tree.root());
  std::vector<Rat> len(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    len[i] = edges[i].painted ? Rat(0) : Rat(1, 2);
  if (classify(binary_tree.root()) == NodeKind::painted_branch) {
    int next = 0;
    assign_painted(binary_tree.root(), Int(2) * binary_tree.leaves(), next, len);
  }
  return MetricTree{binary_tree, std::move(len)};
}

MetricTree collapse_zero_edges(const MetricTree& m) {
  const auto edges = interior_edges(m.tree.root());
  if (m.lengths.size() != edges.size())
    throw std::invalid_argument("collapse_zero_edges: length vector size mismatch");
  std::vector<bool> drop(edges.size());
  bool any = false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    drop[i] = m.lengths[i].is_zero();
    any = any || drop[i];
  }
  if (!any) return m;
  std::vector<int> survivors;
  TreeNode collapsed = contract_tracked(m.tree.root(), drop, survivors);
  std::vector<Rat> new_len;
  new_len.reserve(survivors.size());
  for (int orig : survivors) new_len.push_back(m.lengths[static_cast<std::size_t>(orig)]);
  // Always produces a valid tree: a zero set coming from a feasible metric
  // tree collapses whole constraint groups together.
  MetricTree out{PaintedTree(std::move(collapsed)), std::move(new_len)};
  if (!satisfies(constraint_system(out.tree), out.lengths))
    throw std::logic_error("collapse_zero_edges: collapsed lengths violate the collapsed system");
  return out;
}

MaxLengthPoint max_length_point(const FacetTree& f) {
  PaintedTree tree = realize_facet_tree(f);
  const auto edges = interior_edges(tree.root());
  MaxLengthPoint out{MetricTree{tree, std::vector<Rat>(edges.size())}, false};
  if (is_lower(f)) {
    // Exactly one interior edge, unpainted.
    out.metric.lengths.at(0) = 1;
    return out;
  }
  const auto& up = std::get<UpperFacet>(f);
  const int widest = *std::max_element(up.blocks.begin(), up.blocks.end());
  out.tie_broken =
      std::count(up.blocks.begin(), up.blocks.end(), widest) > 1;
  // Interior edges of the realized upper tree are exactly the block edges in
  // order; the equations force lengths proportional to the block sizes.
  for (std::size_t i = 0; i < up.blocks.size(); ++i)
    out.metric.lengths[i] = Rat(up.blocks[i], widest);
  return out;
}

}  // namespace multiplihedra
