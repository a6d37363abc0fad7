#include <doctest.h>

#include <vector>

#include "multiplihedra/counting.hpp"
#include "multiplihedra/enumeration.hpp"
#include "multiplihedra/tree.hpp"

using namespace multiplihedra;

TEST_CASE("vertex counts reproduce the known sequence") {
  const std::vector<long long> expected = {0, 1, 2, 6, 21, 80, 322, 1348, 5814};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CAPTURE(n);
    CHECK(vertex_count_recursive(static_cast<int>(n)) == Int(expected[n]));
  }
  // Next terms, pinned by the agreement of the two independent formulas.
  CHECK(vertex_count_recursive(9) == 25674);
  CHECK(vertex_count_closed(9) == 25674);
}

TEST_CASE("closed form equals the recursion up to n = 12") {
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(vertex_count_closed(n) == vertex_count_recursive(n));
  }
}

TEST_CASE("closed form hand-checked at n = 2") {
  // (1/2) * (binom(2,1)*binom(0,0) + binom(1,1)*binom(2,1)) = (2 + 2)/2.
  CHECK(vertex_count_closed(2) == 2);
  CHECK(vertex_count_closed(1) == 1);
  CHECK(vertex_count_closed(0) == 0);
}

TEST_CASE("facet counts") {
  CHECK(facet_count(0) == 0);
  CHECK(facet_count(1) == 0);
  CHECK(facet_count(2) == 2);
  CHECK(facet_count(3) == 6);
  CHECK(facet_count(4) == 13);
  CHECK(facet_count(6) == 46);
}

TEST_CASE("catalan and binomial basics") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(8) == 1430);
  CHECK(binomial(22, 11) == 705432);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("trees with only the root painted are counted by Catalan numbers") {
  for (int n = 1; n <= 7; ++n) {
    Int count = 0;
    for (const PaintedTree& t : enumerate_binary(n))
      if (classify(t.root()) == NodeKind::color_change) ++count;
    CAPTURE(n);
    CHECK(count == catalan(n - 1));
  }
}

namespace {

// Truncated integer series, index = degree.
using Series = std::vector<Int>;

Series mul(const Series& a, const Series& b, std::size_t degree) {
  Series out(degree + 1, Int(0));
  for (std::size_t i = 0; i <= degree && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= degree && j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("generating function identity A = x c(x) + A^2") {
  const std::size_t degree = 12;
  Series xc(degree + 1, Int(0));
  for (std::size_t n = 1; n <= degree; ++n) xc[n] = catalan(static_cast<int>(n) - 1);
  Series a(degree + 1, Int(0));
  // Coefficient-wise fixpoint iteration; degree d stabilizes after d rounds.
  for (std::size_t round = 0; round <= degree + 1; ++round) {
    Series next = mul(a, a, degree);
    for (std::size_t i = 0; i <= degree; ++i) next[i] += xc[i];
    a = std::move(next);
  }
  for (std::size_t n = 0; n <= degree; ++n) {
    CAPTURE(n);
    CHECK(a[n] == vertex_count_recursive(static_cast<int>(n)));
  }
}
