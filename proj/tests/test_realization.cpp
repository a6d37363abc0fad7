#include <doctest.h>

#include <set>

#include "multiplihedra/enumeration.hpp"
#include "multiplihedra/realization.hpp"
#include "multiplihedra/refinement.hpp"

using namespace multiplihedra;

namespace {

Point pt(std::initializer_list<const char*> coords) {
  Point p;
  for (const char* c : coords) p.push_back(parse_rational(c));
  return p;
}

const Rat kHalf{1, 2};

}  // namespace

TEST_CASE("the 4-leaf worked example gives (q, 4, 1)") {
  const PaintedTree t = PaintedTree::parse("[{(* *)} [{*} {*}]]");
  CHECK(coordinates(t, kHalf) == pt({"1/2", "4", "1"}));
  CHECK(coordinates(t, Rat(1, 3)) == pt({"1/3", "4", "1"}));
}

TEST_CASE("the six 3-leaf points at q = 1/2") {
  std::set<Point> expected = {pt({"1", "2"}),   pt({"2", "1"}),   pt({"1/2", "2"}),
                              pt({"2", "1/2"}), pt({"1/2", "1"}), pt({"1", "1/2"})};
  std::set<Point> actual;
  for (const PaintedTree& t : enumerate_binary(3)) actual.insert(coordinates(t, kHalf));
  CHECK(actual == expected);
}

TEST_CASE("2-leaf base case") {
  CHECK(coordinates(PaintedTree::parse("[{*} {*}]"), kHalf) == pt({"1"}));
  CHECK(coordinates(PaintedTree::parse("{(* *)}"), kHalf) == pt({"1/2"}));
}

TEST_CASE("weighted coordinates of the worked example") {
  const PaintedTree t = PaintedTree::parse("[{(* *)} [{*} {*}]]");
  // (q w0 w1, (w0+w1)(w2+w3), w2 w3)
  CHECK(coordinates_weighted(t, kHalf, {1, 2, 3, 4}) == pt({"1", "21", "12"}));
  CHECK(coordinates_weighted(t, Rat(2, 3), {2, 1, 1, 5}) == pt({"4/3", "18", "5"}));
}

TEST_CASE("unit weights specialize to the unweighted coordinates") {
  for (int n = 2; n <= 5; ++n)
    for (const PaintedTree& t : enumerate_binary(n))
      CHECK(coordinates_weighted(t, Rat(1, 3), unit_weights(n)) ==
            coordinates(t, Rat(1, 3)));
}

TEST_CASE("at q = 1 the coordinates sum to the pairwise weight products") {
  const Weights w = {2, 1, 3, 1, 2};
  Rat pairs = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) pairs += Rat(w[i]) * Rat(w[j]);
  for (const PaintedTree& t : enumerate_binary(5)) {
    Rat sum = 0;
    for (const Rat& x : coordinates_weighted_unchecked(t, Rat(1), w)) sum += x;
    CHECK(sum == pairs);
  }
}

TEST_CASE("coordinates are bilinear in the weights") {
  const Weights w = {1, 3, 2, 1};
  Weights doubled;
  for (long long x : w) doubled.push_back(2 * x);
  for (const PaintedTree& t : enumerate_binary(4)) {
    const Point a = coordinates_weighted(t, Rat(1, 3), w);
    const Point b = coordinates_weighted(t, Rat(1, 3), doubled);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == 4 * a[i]);
  }
}

TEST_CASE("parameter validation") {
  const PaintedTree t = PaintedTree::parse("{(* *)}");
  CHECK_THROWS_AS(coordinates(t, Rat(0)), std::domain_error);
  CHECK_THROWS_AS(coordinates(t, Rat(1)), std::domain_error);
  CHECK_THROWS_AS(coordinates(t, Rat(7, 2)), std::domain_error);
  CHECK_THROWS_AS(coordinates_weighted(t, kHalf, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(coordinates_weighted(t, kHalf, {1}), std::invalid_argument);
  CHECK_THROWS_AS(coordinates(PaintedTree::parse("{* * *}"), kHalf),
                  std::invalid_argument);
}

TEST_CASE("facet hyperplane coefficient patterns and constants") {
  const Hyperplane low = facet_hyperplane(LowerFacet{1, 3, 3}, kHalf, unit_weights(3));
  CHECK(low.coeffs == std::vector<Rat>{1, 1});
  CHECK(low.rhs == Rat(3, 2));  // (q/2) s (s-1)
  CHECK(low.bound == Bound::below);

  const Hyperplane top =
      facet_hyperplane(UpperFacet{{1, 1, 1, 1}}, kHalf, unit_weights(4));
  CHECK(top.coeffs == std::vector<Rat>{1, 1, 1});
  CHECK(top.rhs == Rat(6));  // n(n-1)/2
  CHECK(top.bound == Bound::above);

  const Hyperplane mid = facet_hyperplane(UpperFacet{{2, 2}}, kHalf, unit_weights(4));
  CHECK(mid.coeffs == std::vector<Rat>{0, 1, 0});
  CHECK(mid.rhs == Rat(4));  // R1 R2

  // Weighted lower constant: q * sum over the span's weight pairs.
  const Hyperplane wlow = facet_hyperplane(LowerFacet{2, 2, 4}, Rat(1, 3), {5, 2, 3, 1});
  CHECK(wlow.coeffs == std::vector<Rat>{0, 1, 0});
  CHECK(wlow.rhs == Rat(2));  // (1/3) * 2*3
}

TEST_CASE("special families sit on the predicted planes") {
  const int n = 4;
  const Weights w = {1, 2, 1, 3};
  Rat pairs = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) pairs += Rat(w[i]) * Rat(w[j]);
  const Rat q(2, 5);
  for (const PaintedTree& t : enumerate_binary(n)) {
    Rat sum = 0;
    for (const Rat& x : coordinates_weighted(t, q, w)) sum += x;
    const bool only_root_painted = classify(t.root()) == NodeKind::color_change;
    bool fully_painted = true;
    for (const EdgeInfo& e : interior_edges(t.root()))
      fully_painted = fully_painted && e.painted;
    if (only_root_painted) CHECK(sum == q * pairs);
    if (fully_painted) CHECK(sum == pairs);
  }
}

TEST_CASE("incidence matches refinement on J(4) for several parameters") {
  const int n = 4;
  const auto trees = enumerate_binary(n);
  for (const Rat& q : {Rat(1, 3), Rat(1, 2), Rat(2, 3)}) {
    for (const Weights& w : {unit_weights(n), Weights{2, 1, 4, 1}}) {
      for (const FacetTree& f : facet_trees(n)) {
        const Hyperplane h = facet_hyperplane(f, q, w);
        for (const PaintedTree& t : trees) {
          const Rat v = h.eval(coordinates_weighted(t, q, w));
          CAPTURE(facet_label(f));
          CAPTURE(t.str());
          if (refines_facet(t, f)) {
            CHECK(v == h.rhs);
          } else if (h.bound == Bound::below) {
            CHECK(v > h.rhs);
          } else {
            CHECK(v < h.rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("loday points are the classical associahedron vertices") {
  std::set<Point> expected = {pt({"1", "2", "3"}), pt({"2", "1", "3"}),
                              pt({"1", "4", "1"}), pt({"3", "1", "2"}),
                              pt({"3", "2", "1"})};
  const auto pts = loday_points(4, unit_weights(4));
  CHECK(std::set<Point>(pts.begin(), pts.end()) == expected);
}
