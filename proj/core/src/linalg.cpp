#include "multiplihedra/linalg.hpp"

#include <stdexcept>

namespace multiplihedra {

int matrix_rank(RatMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const Rat inv = Rat(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rat factor = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  RatMatrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> row(pts[i].size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
    m.push_back(std::move(row));
  }
  if (m.empty()) return 0;
  return matrix_rank(std::move(m));
}

std::optional<std::pair<std::vector<Rat>, Rat>> hyperplane_through(
    const std::vector<Point>& pts, const std::vector<int>& subset) {
  const std::size_t d = subset.size();
  if (d == 0) return std::nullopt;
  const std::size_t cols = d + 1;
  // Rows [p | 1]; a nullvector (a, c) gives the plane a.x = -c.
  RatMatrix m;
  for (int idx : subset) {
    const Point& p = pts[static_cast<std::size_t>(idx)];
    if (p.size() != d) throw std::invalid_argument("hyperplane_through: dimension mismatch");
    std::vector<Rat> row(cols);
    for (std::size_t j = 0; j < d; ++j) row[j] = p[j];
    row[d] = 1;
    m.push_back(std::move(row));
  }
  // Reduced row echelon; need rank d so the nullspace is a line.
  std::vector<int> pivot_col(d, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < d; ++col) {
    std::size_t pivot = rank;
    while (pivot < d && m[pivot][col].is_zero()) ++pivot;
    if (pivot == d) continue;
    std::swap(m[rank], m[pivot]);
    const Rat inv = Rat(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rat factor = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  if (rank < d) return std::nullopt;  // affinely dependent points
  // Exactly one free column; express the nullvector with 1 there.
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < d; ++r) is_pivot[static_cast<std::size_t>(pivot_col[r])] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rat> v(cols, Rat(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < d; ++r)
    v[static_cast<std::size_t>(pivot_col[r])] = -m[r][free_col];
  std::vector<Rat> coeffs(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d));
  Rat rhs = -v[d];
  return std::make_pair(std::move(coeffs), std::move(rhs));
}

void canonicalize_hyperplane(std::vector<Rat>& coeffs, Rat& rhs, const Point& reference) {
  Rat scale;
  for (const Rat& c : coeffs) {
    if (!c.is_zero()) {
      scale = abs(c);
      break;
    }
  }
  if (scale.is_zero()) throw std::invalid_argument("zero hyperplane");
  for (Rat& c : coeffs) c /= scale;
  rhs /= scale;
  Rat at_ref = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) at_ref += coeffs[i] * reference[i];
  if (at_ref > rhs) {
    for (Rat& c : coeffs) c = -c;
    rhs = -rhs;
  }
}

}  // namespace multiplihedra
