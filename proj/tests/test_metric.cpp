#include <doctest.h>

#include <algorithm>

#include "multiplihedra/enumeration.hpp"
#include "multiplihedra/metric.hpp"

using namespace multiplihedra;

TEST_CASE("constraint system of the 5-edge worked example") {
  // Edges in canonical order: e0 left color-change edge, e1 unpainted edge,
  // e2 right branch edge, e3/e4 the right stems.
  const PaintedTree t = PaintedTree::parse("[{(* *)} [{*} {*}]]");
  const auto sys = constraint_system(t);
  REQUIRE(sys.variables() == 5);
  REQUIRE(sys.equations.size() == 2);
  // Inner painted node: the two stems agree.
  CHECK(sys.equations[0].coeffs == std::vector<Rat>{0, 0, 0, 1, -1});
  // Root painted node: (1/2) e0 = (1/2)(e2 + e3 + e4), cleared of denominators.
  CHECK(sys.equations[1].coeffs == std::vector<Rat>{2, 0, -2, -2, -2});
}

TEST_CASE("constraint systems of the fully painted 3-leaf combs") {
  const auto sys = constraint_system(PaintedTree::parse("[[{*} {*}] {*}]"));
  REQUIRE(sys.variables() == 4);  // branch edge, two stems, right stem
  REQUIRE(sys.equations.size() == 2);
  CHECK(sys.equations[0].coeffs == std::vector<Rat>{0, 1, -1, 0});      // a = b
  CHECK(sys.equations[1].coeffs == std::vector<Rat>{1, 1, 1, -2});      // d = (a+b+c)/2
}

TEST_CASE("the painted corolla has an empty system") {
  const auto sys = constraint_system(PaintedTree{painted_corolla(4)});
  CHECK(sys.variables() == 0);
  CHECK(sys.equations.empty());
}

TEST_CASE("metric dimension is n-1 for all binary trees up to n = 5") {
  for (int n = 1; n <= 5; ++n)
    for (const PaintedTree& t : enumerate_binary(n)) {
      CAPTURE(t.str());
      CHECK(free_variable_count(t) == n - 1);
    }
}

TEST_CASE("interior point of the worked 3-leaf example") {
  const MetricTree m = interior_point(PaintedTree::parse("[{*} [{*} {*}]]"));
  // left stem p/(2n) = 1/6, branch edge p/(4n) = 2/12, stems 1/12 each.
  CHECK(m.lengths == std::vector<Rat>{Rat(1, 6), Rat(1, 6), Rat(1, 12), Rat(1, 12)});
  // The same values the figure lists:
  std::vector<Rat> sorted = m.lengths;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<Rat>{Rat(1, 12), Rat(1, 12), Rat(2, 12), Rat(1, 6)});
}

TEST_CASE("interior point of the painted 2-leaf tree is (1/4, 1/4)") {
  const MetricTree m = interior_point(PaintedTree::parse("[{*} {*}]"));
  CHECK(m.lengths == std::vector<Rat>{Rat(1, 4), Rat(1, 4)});
}

TEST_CASE("interior points are strictly feasible with lengths in (0, 1/2]") {
  for (int n = 1; n <= 5; ++n)
    for (const PaintedTree& t : enumerate_binary(n)) {
      const MetricTree m = interior_point(t);
      CAPTURE(t.str());
      CHECK(satisfies(constraint_system(t), m.lengths));
      for (const Rat& l : m.lengths) {
        CHECK(l > 0);
        CHECK(l <= Rat(1, 2));
      }
    }
}

TEST_CASE("interior_point rejects non-binary trees") {
  CHECK_THROWS_AS(interior_point(PaintedTree::parse("{* * *}")), std::invalid_argument);
}

TEST_CASE("collapsing zero edges") {
  const PaintedTree t = PaintedTree::parse("{((* *) *)}");

  SUBCASE("all zeros collapse to the corolla") {
    const MetricTree m{t, {Rat(0), Rat(0)}};
    const MetricTree c = collapse_zero_edges(m);
    CHECK(c.tree.str() == "{* * *}");
    CHECK(c.lengths.empty());
  }

  SUBCASE("a single zero widens one node and keeps the other length") {
    const MetricTree m{t, {Rat(1, 3), Rat(0)}};
    const MetricTree c = collapse_zero_edges(m);
    CHECK(c.tree.str() == "{(* * *)}");
    CHECK(c.lengths == std::vector<Rat>{Rat(1, 3)});
  }

  SUBCASE("no zeros is the identity") {
    const MetricTree m{t, {Rat(1, 3), Rat(1, 2)}};
    const MetricTree c = collapse_zero_edges(m);
    CHECK(c.tree == t);
    CHECK(c.lengths == m.lengths);
  }

  SUBCASE("idempotent") {
    const MetricTree m{t, {Rat(0), Rat(1, 2)}};
    const MetricTree once = collapse_zero_edges(m);
    const MetricTree twice = collapse_zero_edges(once);
    CHECK(once.tree == twice.tree);
    CHECK(once.lengths == twice.lengths);
  }
}

TEST_CASE("collapsing a painted group keeps the collapsed system satisfied") {
  // Zeroing the whole painted part of the fully painted 2-leaf tree leaves
  // the corolla; u = v = 0 is the only consistent zero set.
  const MetricTree m{PaintedTree::parse("[{*} {*}]"), {Rat(0), Rat(0)}};
  const MetricTree c = collapse_zero_edges(m);
  CHECK(c.tree.str() == "{* *}");
}

TEST_CASE("max length representatives of facets") {
  const MaxLengthPoint low = max_length_point(LowerFacet{1, 2, 3});
  CHECK(low.metric.lengths == std::vector<Rat>{Rat(1)});
  CHECK_FALSE(low.tie_broken);

  const MaxLengthPoint up = max_length_point(UpperFacet{{2, 1}});
  CHECK(up.metric.lengths == std::vector<Rat>{Rat(1), Rat(1, 2)});
  CHECK_FALSE(up.tie_broken);

  const MaxLengthPoint all = max_length_point(UpperFacet{{1, 1, 1}});
  CHECK(all.metric.lengths == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
  CHECK(all.tie_broken);

  for (const FacetTree& f : facet_trees(4)) {
    const MaxLengthPoint p = max_length_point(f);
    CHECK(satisfies(constraint_system(p.metric.tree), p.metric.lengths));
  }
}

TEST_CASE("edge bounds tighten where the equations force it") {
  // Right stem of [{(* *)} {*}] obeys e2 = e0 / 2, so it never exceeds 1/2.
  const auto sys = constraint_system(PaintedTree::parse("[{(* *)} {*}]"));
  const auto ub = edge_upper_bounds(sys);
  CHECK(ub == std::vector<Rat>{Rat(1), Rat(1), Rat(1, 2)});
}

TEST_CASE("face dimensions come from free variable counts") {
  // Facet trees have exactly one free length.
  for (const FacetTree& f : facet_trees(4))
    CHECK(free_variable_count(realize_facet_tree(f)) == 1);
  CHECK(free_variable_count(PaintedTree{painted_corolla(5)}) == 0);
}
