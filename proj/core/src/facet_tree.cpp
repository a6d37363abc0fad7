#include "multiplihedra/facet_tree.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "multiplihedra/enumeration.hpp"

namespace multiplihedra {

int UpperFacet::leaves() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

int facet_leaves(const FacetTree& f) {
  if (const auto* low = std::get_if<LowerFacet>(&f)) return low->leaves;
  return std::get<UpperFacet>(f).leaves();
}

bool is_lower(const FacetTree& f) { return std::holds_alternative<LowerFacet>(f); }

std::string facet_label(const FacetTree& f) {
  std::ostringstream out;
  if (const auto* low = std::get_if<LowerFacet>(&f)) {
    out << "l(" << low->gap << "," << low->span << ")";
  } else {
    const auto& up = std::get<UpperFacet>(f);
    out << "u(" << up.blocks.size() << ";";
    for (std::size_t i = 0; i < up.blocks.size(); ++i) {
      if (i) out << ",";
      out << up.blocks[i];
    }
    out << ")";
  }
  return out.str();
}

namespace {

void check_lower(const LowerFacet& low) {
  const int r = low.leaves + 1 - low.span;
  if (low.span < 2 || low.span > low.leaves || low.gap < 1 || low.gap > r)
    throw std::invalid_argument("invalid lower facet tree " + facet_label(low));
}

void check_upper(const UpperFacet& up) {
  if (up.blocks.size() < 2)
    throw std::invalid_argument("invalid upper facet tree " + facet_label(up));
  for (int r : up.blocks)
    if (r < 1) throw std::invalid_argument("invalid upper facet tree " + facet_label(up));
}

}  // namespace

FacetTree parse_facet_label(std::string_view text, int leaves) {
  const auto fail = [&]() {
    throw std::invalid_argument("malformed facet label: '" + std::string(text) + "'");
  };
  if (text.size() < 6 || text[1] != '(' || text.back() != ')') fail();
  const std::string body(text.substr(2, text.size() - 3));
  if (text[0] == 'l') {
    const auto comma = body.find(',');
    if (comma == std::string::npos) fail();
    LowerFacet low;
    try {
      low.gap = std::stoi(body.substr(0, comma));
      low.span = std::stoi(body.substr(comma + 1));
    } catch (const std::exception&) {
      fail();
    }
    low.leaves = leaves;
    check_lower(low);
    return low;
  }
  if (text[0] == 'u') {
    const auto semi = body.find(';');
    if (semi == std::string::npos) fail();
    UpperFacet up;
    std::istringstream in(body.substr(semi + 1));
    std::string part;
    try {
      while (std::getline(in, part, ',')) up.blocks.push_back(std::stoi(part));
      if (std::stoul(body.substr(0, semi)) != up.blocks.size()) fail();
    } catch (const std::exception&) {
      fail();
    }
    check_upper(up);
    if (up.leaves() != leaves) fail();
    return up;
  }
  fail();
  return LowerFacet{};  // unreachable
}

std::vector<FacetTree> facet_trees(int n) {
  std::vector<FacetTree> out;
  if (n < 2) return out;
  for (int s = 2; s <= n; ++s)
    for (int k = 1; k <= n + 1 - s; ++k) out.push_back(LowerFacet{k, s, n});
  for (int t = 2; t <= n; ++t)
    for (const auto& comp : compositions(n, t)) out.push_back(UpperFacet{comp});
  return out;
}

PaintedTree realize_facet_tree(const FacetTree& f) {
  if (const auto* low = std::get_if<LowerFacet>(&f)) {
    check_lower(*low);
    const int r = low->leaves + 1 - low->span;
    TreeNode base = painted_corolla(r);
    TreeNode result = graft(base, low->gap - 1, unpainted_corolla(low->span));
    return PaintedTree(std::move(result));
  }
  const auto& up = std::get<UpperFacet>(f);
  check_upper(up);
  TreeNode root;
  root.edge = Paint::painted;
  for (int r : up.blocks) root.children.push_back(painted_corolla(r));
  return PaintedTree(std::move(root));
}

}  // namespace multiplihedra
