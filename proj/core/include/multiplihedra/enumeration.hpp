#pragma once

#include <vector>

#include "multiplihedra/tree.hpp"

namespace multiplihedra {

// Unpainted binary trees with n leaves, C(n-1) of them. Ordered recursively
// by the leaf count of the left subtree (ascending), then by each side's own
// order. This order is fixed; golden files depend on it.
std::vector<TreeNode> unpainted_binary_trees(int n);

// All unpainted planar trees with n leaves and branch arity >= 2
// (Schroeder trees). Ordered by root arity, then composition of leaf counts
// in lexicographic order, then children recursively.
std::vector<TreeNode> unpainted_trees(int n);

// Every binary painted tree with n leaves, exactly once, in canonical order:
// first the trees with only the root painted (one per unpainted binary tree,
// in that order), then the trees whose lowest branch node is painted, keyed
// by (left leaf count, left tree, right tree). Length equals the vertex
// count of the n-th multiplihedron. n == 0 gives an empty list.
std::vector<PaintedTree> enumerate_binary(int n);

// Every valid painted tree with n leaves (the faces of the polytope): first
// the color-change-rooted trees by (arity, leaf composition, unpainted
// subtrees), then the painted-branch-rooted trees by (arity, composition,
// recursive sub-order). Includes the painted corolla and all binary trees.
std::vector<PaintedTree> enumerate_faces(int n);

// All compositions of n into exactly k positive parts, lexicographic.
std::vector<std::vector<int>> compositions(int n, int k);

}  // namespace multiplihedra
