#include "multiplihedra/tree.hpp"

#include <sstream>
#include <stdexcept>

namespace multiplihedra {

bool operator==(const TreeNode& a, const TreeNode& b) {
  if (a.edge != b.edge || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(a.children[i] == b.children[i])) return false;
  return true;
}

bool operator<(const TreeNode& a, const TreeNode& b) {
  if (a.edge != b.edge) return a.edge < b.edge;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.children[i] < b.children[i]) return true;
    if (b.children[i] < a.children[i]) return false;
  }
  return a.children.size() < b.children.size();
}

NodeKind classify(const TreeNode& v) {
  if (v.leaf()) return NodeKind::leaf;
  bool any_painted = false;
  bool any_unpainted = false;
  for (const TreeNode& c : v.children) {
    (c.edge == Paint::painted ? any_painted : any_unpainted) = true;
  }
  if (any_painted && any_unpainted) return NodeKind::invalid;
  if (any_painted) {
    // Painted branch: lower edge must be painted too, arity >= 2.
    if (v.edge != Paint::painted || v.children.size() < 2) return NodeKind::invalid;
    return NodeKind::painted_branch;
  }
  if (v.edge == Paint::painted) return NodeKind::color_change;  // any arity >= 1
  if (v.children.size() < 2) return NodeKind::invalid;
  return NodeKind::unpainted_branch;
}

namespace {

bool validate_rec(const TreeNode& v, Validation& out) {
  switch (classify(v)) {
    case NodeKind::leaf:
      if (v.edge == Paint::painted) {
        out = {false, "leaf edge is painted"};
        return false;
      }
      return true;
    case NodeKind::invalid: {
      std::ostringstream msg;
      if (v.edge == Paint::painted && v.children.size() >= 2) {
        msg << "painting ends or splits inconsistently at a node of arity "
            << v.children.size();
      } else {
        msg << "node of arity " << v.children.size() << " has no allowed type";
      }
      out = {false, msg.str()};
      return false;
    }
    default:
      break;
  }
  for (const TreeNode& c : v.children)
    if (!validate_rec(c, out)) return false;
  return true;
}

}  // namespace

Validation validate(const TreeNode& root) {
  Validation out;
  if (root.edge != Paint::painted) return {false, "root edge is not painted"};
  // A painted root edge going straight into an unpainted branch node would
  // classify that node as invalid below, but give the clearer message here.
  validate_rec(root, out);
  return out;
}

int leaf_count(const TreeNode& v) {
  if (v.leaf()) return 1;
  int n = 0;
  for (const TreeNode& c : v.children) n += leaf_count(c);
  return n;
}

namespace {

void format_rec(const TreeNode& v, std::string& out) {
  switch (classify(v)) {
    case NodeKind::leaf:
      out += '*';
      return;
    case NodeKind::unpainted_branch:
      out += '(';
      break;
    case NodeKind::painted_branch:
      out += '[';
      break;
    case NodeKind::color_change:
      out += '{';
      break;
    case NodeKind::invalid:
      throw std::invalid_argument("cannot format tree with invalid node");
  }
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    if (i) out += ' ';
    format_rec(v.children[i], out);
  }
  switch (classify(v)) {
    case NodeKind::unpainted_branch:
      out += ')';
      break;
    case NodeKind::painted_branch:
      out += ']';
      break;
    default:
      out += '}';
      break;
  }
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "tree parse error at offset " << pos << ": " << what;
    throw std::invalid_argument(msg.str());
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  TreeNode node(Paint edge_below) {
    skip_ws();
    const char c = peek();
    TreeNode v;
    v.edge = edge_below;
    if (c == '*') {
      ++pos;
      return v;
    }
    char close;
    Paint child_paint;
    if (c == '(') {
      close = ')';
      child_paint = Paint::unpainted;
    } else if (c == '[') {
      close = ']';
      child_paint = Paint::painted;
    } else if (c == '{') {
      close = '}';
      child_paint = Paint::unpainted;
    } else {
      fail("expected '*', '(', '[' or '{'");
    }
    ++pos;
    while (true) {
      skip_ws();
      if (peek() == close) {
        ++pos;
        break;
      }
      if (peek() == '\0') fail("unterminated node");
      v.children.push_back(node(child_paint));
    }
    if (v.children.empty()) fail("node with no children");
    return v;
  }
};

}  // namespace

std::string format_tree(const TreeNode& root) {
  std::string out;
  format_rec(root, out);
  return out;
}

TreeNode parse_tree(std::string_view text) {
  Parser p{text};
  p.skip_ws();
  // The topmost lower edge is the root edge: painted for '{'/'[' forms,
  // unpainted for a standalone unpainted tree.
  const char c = p.peek();
  const Paint root_paint =
      (c == '{' || c == '[') ? Paint::painted : Paint::unpainted;
  TreeNode v = p.node(root_paint);
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

namespace {

void collect_edges(const TreeNode& v, bool is_top, int leaf_offset,
                   std::vector<EdgeInfo>& out) {
  const int n = leaf_count(v);
  if (!is_top && !v.leaf()) {
    out.push_back({v.edge == Paint::painted, leaf_offset, leaf_offset + n - 1});
  }
  int off = leaf_offset;
  for (const TreeNode& c : v.children) {
    collect_edges(c, false, off, out);
    off += leaf_count(c);
  }
}

// Rebuilds the tree while splicing away dropped edges. `next` walks the
// canonical interior-edge index in step with collect_edges.
void contract_rec(const TreeNode& v, bool is_top, const std::vector<bool>& drop,
                  int& next, TreeNode& out_parent, std::vector<int>* survivors) {
  TreeNode copy;
  copy.edge = v.edge;
  const bool interior = !is_top && !v.leaf();
  int my_index = -1;
  if (interior) my_index = next++;

  const bool dropped = interior && drop[static_cast<std::size_t>(my_index)];
  TreeNode* target;
  if (dropped) {
    target = &out_parent;  // children splice into the parent in place
  } else {
    target = &copy;
  }
  for (const TreeNode& c : v.children) {
    contract_rec(c, false, drop, next, *target, survivors);
  }
  if (!dropped) {
    if (survivors && interior) survivors->push_back(my_index);
    out_parent.children.push_back(std::move(copy));
  }
}

}  // namespace

std::vector<EdgeInfo> interior_edges(const TreeNode& root) {
  std::vector<EdgeInfo> out;
  collect_edges(root, true, 0, out);
  return out;
}

TreeNode contract_tracked(const TreeNode& root, const std::vector<bool>& drop,
                          std::vector<int>& surviving_original_index) {
  surviving_original_index.clear();
  TreeNode holder;
  int next = 0;
  // The survivors vector must come out in the canonical order of the NEW
  // tree. contract_rec appends on post-order completion of each kept node,
  // which is not DFS order of the result, so re-derive it instead.
  contract_rec(root, true, drop, next, holder, nullptr);
  TreeNode result = std::move(holder.children.at(0));

  // Walk original and result in parallel: the kept edges appear in the same
  // relative DFS order in both trees.
  std::vector<int> kept;
  const auto edges = interior_edges(root);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!drop[i]) kept.push_back(static_cast<int>(i));
  surviving_original_index = std::move(kept);
  return result;
}

TreeNode contract(const TreeNode& root, const std::vector<bool>& drop) {
  TreeNode holder;
  int next = 0;
  contract_rec(root, true, drop, next, holder, nullptr);
  return std::move(holder.children.at(0));
}

namespace {

bool graft_rec(TreeNode& v, int& remaining, const TreeNode& scion) {
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    TreeNode& c = v.children[i];
    if (c.leaf()) {
      if (remaining == 0) {
        if (c.edge != scion.edge) {
          throw std::invalid_argument(
              "graft paint mismatch: scion root edge and host leaf edge differ "
              "(no color-change node is inserted automatically)");
        }
        c = scion;
        return true;
      }
      --remaining;
    } else {
      if (graft_rec(c, remaining, scion)) return true;
    }
  }
  return false;
}

}  // namespace

TreeNode graft(const TreeNode& base, int leaf_index, const TreeNode& scion) {
  if (leaf_index < 0 || leaf_index >= leaf_count(base))
    throw std::invalid_argument("graft: leaf index out of range");
  TreeNode result = base;
  if (result.leaf()) {
    // Grafting onto a bare edge: the edge is identified with the scion root.
    if (result.edge != scion.edge)
      throw std::invalid_argument("graft paint mismatch at bare edge");
    return scion;
  }
  int remaining = leaf_index;
  graft_rec(result, remaining, scion);
  return result;
}

TreeNode painted_corolla(int n) {
  if (n < 1) throw std::invalid_argument("painted_corolla: need n >= 1");
  TreeNode v;
  v.edge = Paint::painted;
  v.children.assign(static_cast<std::size_t>(n), TreeNode{});
  return v;
}

TreeNode unpainted_corolla(int n) {
  if (n < 1) throw std::invalid_argument("unpainted_corolla: need n >= 1");
  if (n == 1) return TreeNode{};
  TreeNode v;
  v.children.assign(static_cast<std::size_t>(n), TreeNode{});
  return v;
}

PaintedTree::PaintedTree(TreeNode root) : root_(std::move(root)) {
  const Validation v = validate(root_);
  if (!v.ok) throw std::invalid_argument("invalid painted tree: " + v.reason);
  leaves_ = leaf_count(root_);
}

PaintedTree PaintedTree::parse(std::string_view text) {
  return PaintedTree(parse_tree(text));
}

namespace {

bool is_binary_rec(const TreeNode& v) {
  switch (classify(v)) {
    case NodeKind::leaf:
      return true;
    case NodeKind::color_change:
      if (v.children.size() != 1) return false;
      break;
    case NodeKind::unpainted_branch:
    case NodeKind::painted_branch:
      if (v.children.size() != 2) return false;
      break;
    case NodeKind::invalid:
      return false;
  }
  for (const TreeNode& c : v.children)
    if (!is_binary_rec(c)) return false;
  return true;
}

}  // namespace

bool PaintedTree::is_binary() const { return is_binary_rec(root_); }

}  // namespace multiplihedra
