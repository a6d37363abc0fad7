#include "multiplihedra/enumeration.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace multiplihedra {

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || n < k) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left - (k - 1 - pos); ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

namespace {

TreeNode with_paint(TreeNode v, Paint p) {
  v.edge = p;
  return v;
}

// Cartesian product of per-slot choices, odometer order (last slot fastest).
void product_over(const std::vector<const std::vector<TreeNode>*>& slots,
                  const std::function<void(std::vector<TreeNode>&)>& emit) {
  std::vector<TreeNode> cur(slots.size());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == slots.size()) {
      emit(cur);
      return;
    }
    for (const TreeNode& t : *slots[pos]) {
      cur[pos] = t;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

std::vector<TreeNode> unpainted_binary_rec(int n, std::map<int, std::vector<TreeNode>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<TreeNode> out;
  if (n == 1) {
    out.push_back(TreeNode{});
  } else {
    for (int i = 1; i <= n - 1; ++i) {
      const auto left = unpainted_binary_rec(i, memo);
      const auto right = unpainted_binary_rec(n - i, memo);
      for (const TreeNode& l : left)
        for (const TreeNode& r : right) {
          TreeNode v;
          v.children = {l, r};
          out.push_back(std::move(v));
        }
    }
  }
  memo[n] = out;
  return out;
}

std::vector<TreeNode> painted_binary_rec(int n, std::map<int, std::vector<TreeNode>>& memo,
                                         std::map<int, std::vector<TreeNode>>& unpainted_memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<TreeNode> out;
  // Trees with only the root painted: a color-change node under an
  // unpainted binary tree. These come first (the Catalan block).
  for (const TreeNode& u : unpainted_binary_rec(n, unpainted_memo)) {
    TreeNode cc;
    cc.edge = Paint::painted;
    cc.children = {u};
    out.push_back(std::move(cc));
  }
  // Trees whose lowest branch node is painted, split by left leaf count.
  for (int i = 1; i <= n - 1; ++i) {
    const auto left = painted_binary_rec(i, memo, unpainted_memo);
    const auto right = painted_binary_rec(n - i, memo, unpainted_memo);
    for (const TreeNode& l : left)
      for (const TreeNode& r : right) {
        TreeNode v;
        v.edge = Paint::painted;
        v.children = {l, r};
        out.push_back(std::move(v));
      }
  }
  memo[n] = out;
  return out;
}

std::vector<TreeNode> unpainted_trees_rec(int n, std::map<int, std::vector<TreeNode>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<TreeNode> out;
  if (n == 1) {
    out.push_back(TreeNode{});
  } else {
    for (int k = 2; k <= n; ++k)
      for (const auto& comp : compositions(n, k)) {
        std::vector<const std::vector<TreeNode>*> slots;
        std::vector<std::vector<TreeNode>> storage(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
          storage[i] = unpainted_trees_rec(comp[i], memo);
          slots.push_back(&storage[i]);
        }
        product_over(slots, [&](std::vector<TreeNode>& parts) {
          TreeNode v;
          v.children = parts;
          out.push_back(std::move(v));
        });
      }
  }
  memo[n] = out;
  return out;
}

std::vector<TreeNode> faces_rec(int n, std::map<int, std::vector<TreeNode>>& memo,
                                std::map<int, std::vector<TreeNode>>& unpainted_memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<TreeNode> out;
  // Color-change root: an ordered forest of unpainted trees above one node.
  for (int arity = 1; arity <= n; ++arity)
    for (const auto& comp : compositions(n, arity)) {
      std::vector<std::vector<TreeNode>> storage(comp.size());
      std::vector<const std::vector<TreeNode>*> slots;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        storage[i] = unpainted_trees_rec(comp[i], unpainted_memo);
        slots.push_back(&storage[i]);
      }
      product_over(slots, [&](std::vector<TreeNode>& parts) {
        TreeNode cc;
        cc.edge = Paint::painted;
        cc.children = parts;
        out.push_back(std::move(cc));
      });
    }
  // Painted branch root over smaller painted trees.
  for (int k = 2; k <= n; ++k)
    for (const auto& comp : compositions(n, k)) {
      std::vector<std::vector<TreeNode>> storage(comp.size());
      std::vector<const std::vector<TreeNode>*> slots;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        storage[i] = faces_rec(comp[i], memo, unpainted_memo);
        slots.push_back(&storage[i]);
      }
      product_over(slots, [&](std::vector<TreeNode>& parts) {
        TreeNode v;
        v.edge = Paint::painted;
        v.children = parts;
        out.push_back(std::move(v));
      });
    }
  memo[n] = out;
  return out;
}

}  // namespace

std::vector<TreeNode> unpainted_binary_trees(int n) {
  if (n < 1) return {};
  std::map<int, std::vector<TreeNode>> memo;
  return unpainted_binary_rec(n, memo);
}

std::vector<TreeNode> unpainted_trees(int n) {
  if (n < 1) return {};
  std::map<int, std::vector<TreeNode>> memo;
  return unpainted_trees_rec(n, memo);
}

std::vector<PaintedTree> enumerate_binary(int n) {
  std::vector<PaintedTree> out;
  if (n < 1) return out;
  std::map<int, std::vector<TreeNode>> memo, unpainted_memo;
  for (TreeNode& t : painted_binary_rec(n, memo, unpainted_memo))
    out.emplace_back(std::move(t));
  return out;
}

std::vector<PaintedTree> enumerate_faces(int n) {
  std::vector<PaintedTree> out;
  if (n < 1) return out;
  std::map<int, std::vector<TreeNode>> memo, unpainted_memo;
  for (TreeNode& t : faces_rec(n, memo, unpainted_memo))
    out.emplace_back(std::move(t));
  return out;
}

}  // namespace multiplihedra
