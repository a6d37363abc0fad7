#include "multiplihedra/realization.hpp"

#include <stdexcept>

#include "multiplihedra/enumeration.hpp"

namespace multiplihedra {

namespace {

void check_weights(int n, const Weights& w) {
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("expected one weight per leaf");
  for (long long wi : w)
    if (wi <= 0) throw std::invalid_argument("leaf weights must be positive");
}

void check_q_open_interval(const Rat& q) {
  if (q <= 0 || q >= 1)
    throw std::domain_error("q must lie strictly between 0 and 1 "
                            "(boundary values are quotient mode)");
}

// Sum of leaf weights over [lo, hi] via the prefix table.
Rat weight_sum(const std::vector<Rat>& prefix, int lo, int hi) {
  return prefix[static_cast<std::size_t>(hi) + 1] - prefix[static_cast<std::size_t>(lo)];
}

// Walks any tree whose branch nodes are binary; emits one coordinate per
// branch node at its in-order gap position.
void walk(const TreeNode& v, int leaf_offset, const Rat& q,
          const std::vector<Rat>& prefix, Point& out) {
  if (v.leaf()) return;
  if (v.children.size() == 1) {  // color-change node
    walk(v.children[0], leaf_offset, q, prefix, out);
    return;
  }
  const TreeNode& left = v.children[0];
  const TreeNode& right = v.children[1];
  const int nl = leaf_count(left);
  const int nr = leaf_count(right);
  const int gap = leaf_offset + nl;  // node index, 1-based
  Rat x = weight_sum(prefix, leaf_offset, gap - 1) *
          weight_sum(prefix, gap, leaf_offset + nl + nr - 1);
  if (classify(v) == NodeKind::unpainted_branch) x *= q;
  out[static_cast<std::size_t>(gap) - 1] = x;
  walk(left, leaf_offset, q, prefix, out);
  walk(right, gap, q, prefix, out);
}

std::vector<Rat> prefix_sums(const Weights& w) {
  std::vector<Rat> prefix(w.size() + 1, Rat(0));
  for (std::size_t i = 0; i < w.size(); ++i) prefix[i + 1] = prefix[i] + Rat(w[i]);
  return prefix;
}

}  // namespace

Point coordinates_weighted_unchecked(const PaintedTree& t, const Rat& q, const Weights& w) {
  if (!t.is_binary())
    throw std::invalid_argument("coordinates are defined for binary painted trees");
  check_weights(t.leaves(), w);
  const auto prefix = prefix_sums(w);
  Point out(static_cast<std::size_t>(t.leaves()) - 1);
  walk(t.root(), 0, q, prefix, out);
  return out;
}

Point coordinates_weighted(const PaintedTree& t, const Rat& q, const Weights& w) {
  check_q_open_interval(q);
  return coordinates_weighted_unchecked(t, q, w);
}

Point coordinates(const PaintedTree& t, const Rat& q) {
  return coordinates_weighted(t, q, unit_weights(t.leaves()));
}

std::vector<Point> realize_all(int n, const Rat& q, const Weights& w) {
  check_q_open_interval(q);
  std::vector<Point> out;
  for (const PaintedTree& t : enumerate_binary(n))
    out.push_back(coordinates_weighted_unchecked(t, q, w));
  return out;
}

std::vector<Point> loday_points(int n, const Weights& w) {
  check_weights(n, w);
  const auto prefix = prefix_sums(w);
  std::vector<Point> out;
  for (const TreeNode& u : unpainted_binary_trees(n)) {
    Point p(static_cast<std::size_t>(n) - 1);
    walk(u, 0, Rat(1), prefix, p);
    out.push_back(std::move(p));
  }
  return out;
}

Rat Hyperplane::eval(const Point& p) const {
  if (p.size() != coeffs.size())
    throw std::invalid_argument("hyperplane/point dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) acc += coeffs[i] * p[i];
  return acc;
}

bool Hyperplane::admits(const Point& p) const {
  const Rat v = eval(p);
  return bound == Bound::below ? v >= rhs : v <= rhs;
}

Hyperplane facet_hyperplane(const FacetTree& f, const Rat& q, const Weights& w) {
  const int n = facet_leaves(f);
  check_weights(n, w);
  Hyperplane h;
  h.coeffs.assign(static_cast<std::size_t>(n) - 1, Rat(0));
  h.facet = f;
  if (const auto* low = std::get_if<LowerFacet>(&f)) {
    // x_k + ... + x_{k+s-2}  >=  q * sum of weight products over the span.
    for (int i = low->gap; i <= low->gap + low->span - 2; ++i)
      h.coeffs[static_cast<std::size_t>(i) - 1] = 1;
    Rat rhs = 0;
    for (int i = low->gap - 1; i <= low->gap + low->span - 2; ++i)
      for (int j = i + 1; j <= low->gap + low->span - 2; ++j)
        rhs += Rat(w[static_cast<std::size_t>(i)]) * Rat(w[static_cast<std::size_t>(j)]);
    h.rhs = q * rhs;
    h.bound = Bound::below;
    return h;
  }
  const auto& up = std::get<UpperFacet>(f);
  // x at each block boundary  <=  sum over block pairs of block weight sums.
  std::vector<Rat> block_sum;
  int pos = 0;
  for (int r : up.blocks) {
    Rat s = 0;
    for (int i = 0; i < r; ++i) s += Rat(w[static_cast<std::size_t>(pos + i)]);
    block_sum.push_back(s);
    pos += r;
    if (pos < n) h.coeffs[static_cast<std::size_t>(pos) - 1] = 1;
  }
  Rat rhs = 0;
  for (std::size_t i = 0; i < block_sum.size(); ++i)
    for (std::size_t j = i + 1; j < block_sum.size(); ++j) rhs += block_sum[i] * block_sum[j];
  h.rhs = rhs;
  h.bound = Bound::above;
  return h;
}

}  // namespace multiplihedra
