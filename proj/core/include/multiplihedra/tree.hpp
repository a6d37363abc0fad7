#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace multiplihedra {

// Edge colors. Painting always starts at the root edge and spreads upward;
// leaf edges stay unpainted.
enum class Paint : std::uint8_t { unpainted, painted };

// A vertex of a rooted planar tree together with the paint of the edge
// directly below it. A whole tree is held by its topmost-below-the-root
// vertex, whose `edge` is the root edge.
struct TreeNode {
  Paint edge = Paint::unpainted;
  std::vector<TreeNode> children;  // left to right; empty means leaf

  bool leaf() const { return children.empty(); }
};

bool operator==(const TreeNode& a, const TreeNode& b);
inline bool operator!=(const TreeNode& a, const TreeNode& b) { return !(a == b); }
// Structural lexicographic order (paint first, then children); used for
// canonical sorting and map keys.
bool operator<(const TreeNode& a, const TreeNode& b);

// The node kinds allowed in a painted tree. `color_change` is the node where
// painting stops: painted edge below, only unpainted edges above, any arity
// (arity 1 in binary trees). Branch nodes need arity >= 2 and uniform paint.
enum class NodeKind { leaf, unpainted_branch, painted_branch, color_change, invalid };
NodeKind classify(const TreeNode& v);

struct Validation {
  bool ok = true;
  std::string reason;  // names the first violated rule
};

// Total check of the painted-tree invariants: painted root edge, unpainted
// leaf edges, every node one of the allowed kinds.
Validation validate(const TreeNode& root);

int leaf_count(const TreeNode& v);

// Canonical text form. Grammar:
//   painted   := '{' unpainted (' ' unpainted)* '}'   color-change node
//              | '[' painted (' ' painted)+ ']'       painted branch node
//   unpainted := '*'                                  leaf
//              | '(' unpainted (' ' unpainted)+ ')'   unpainted branch node
// A valid painted tree always renders to the `painted` production. Formatting
// requires every node to classify; parsing reconstructs edge paints from the
// brackets (children of '[' are painted, everything else unpainted, the
// topmost node's lower edge is painted unless it forms an unpainted tree).
std::string format_tree(const TreeNode& root);
TreeNode parse_tree(std::string_view text);  // throws std::invalid_argument

// An interior edge is the lower edge of an internal, non-topmost vertex.
// Indices follow depth-first, left-to-right traversal; this order is part of
// the public contract (metric systems and exports key off it).
struct EdgeInfo {
  bool painted = false;
  int leaf_lo = 0;  // leaves sitting above this edge, inclusive range
  int leaf_hi = 0;
};
std::vector<EdgeInfo> interior_edges(const TreeNode& root);

// Contracts every interior edge whose index is set in `drop` (merging its
// endpoints), all at once. The result may be invalid as a painted tree; the
// caller decides whether that matters.
TreeNode contract(const TreeNode& root, const std::vector<bool>& drop);

// As above, and also reports for each interior edge of the contracted tree
// the index of the surviving original edge.
TreeNode contract_tracked(const TreeNode& root, const std::vector<bool>& drop,
                          std::vector<int>& surviving_original_index);

// Replaces leaf `leaf_index` (0-based, left to right) of `base` with `scion`,
// identifying the leaf edge with the scion's root edge. The two must carry the
// same paint; auto-inserting a color-change node is deliberately not done.
// Throws std::invalid_argument on paint mismatch or bad index.
TreeNode graft(const TreeNode& base, int leaf_index, const TreeNode& scion);

TreeNode painted_corolla(int n);    // {*...*}; n >= 1
TreeNode unpainted_corolla(int n);  // (*...*); '*' when n == 1

// A validated painted tree. Immutable after construction.
class PaintedTree {
 public:
  explicit PaintedTree(TreeNode root);  // throws std::invalid_argument if invalid
  static PaintedTree parse(std::string_view text);

  const TreeNode& root() const { return root_; }
  int leaves() const { return leaves_; }
  std::string str() const { return format_tree(root_); }

  // Only node kinds (1), (2), (3): branch nodes of arity 2, color-change
  // nodes of arity 1. These index the vertices of the polytope.
  bool is_binary() const;

  friend bool operator==(const PaintedTree& a, const PaintedTree& b) {
    return a.root_ == b.root_;
  }
  friend bool operator!=(const PaintedTree& a, const PaintedTree& b) { return !(a == b); }
  friend bool operator<(const PaintedTree& a, const PaintedTree& b) {
    return a.root_ < b.root_;
  }

 private:
  TreeNode root_;
  int leaves_;
};

}  // namespace multiplihedra
