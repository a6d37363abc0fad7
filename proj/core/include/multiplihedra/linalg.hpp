#pragma once

#include <optional>
#include <vector>

#include "multiplihedra/rational.hpp"

namespace multiplihedra {

using RatMatrix = std::vector<std::vector<Rat>>;

// Rank by exact Gaussian elimination (destroys its copy of the input).
int matrix_rank(RatMatrix m);

// Dimension of the affine hull of the point set (rank of p_i - p_0).
int affine_dimension(const std::vector<Point>& pts);

// The hyperplane a.x = b through d affinely independent points of R^d,
// normalized so the first nonzero coefficient is +1 or -1 is NOT fixed here;
// returns nullopt when the points are affinely dependent.
std::optional<std::pair<std::vector<Rat>, Rat>> hyperplane_through(
    const std::vector<Point>& pts, const std::vector<int>& subset);

// In-place canonical form: scale so the first nonzero coefficient has
// absolute value 1, then orient so that `reference` satisfies a.x <= b.
void canonicalize_hyperplane(std::vector<Rat>& coeffs, Rat& rhs, const Point& reference);

}  // namespace multiplihedra
