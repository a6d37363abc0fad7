#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "multiplihedra/counting.hpp"
#include "multiplihedra/export.hpp"

using namespace multiplihedra;

namespace {

const Rat kHalf{1, 2};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::multiset<Point> row_values(const std::string& polymake_text) {
  std::istringstream in(polymake_text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "POINTS");
  std::multiset<Point> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    Point p;
    REQUIRE((fields >> field));
    REQUIRE(field == "1");  // homogenizing coordinate
    while (fields >> field) p.push_back(parse_rational(field));
    rows.insert(std::move(p));
  }
  return rows;
}

}  // namespace

TEST_CASE("polymake export for n = 2") {
  const ExportBundle b = make_bundle(2, kHalf, unit_weights(2), false);
  CHECK(export_polymake(b) == "POINTS\n1 1/2\n1 1\n");
}

TEST_CASE("polymake export for n = 3 has six rows") {
  const ExportBundle b = make_bundle(3, kHalf, unit_weights(3), false);
  CHECK(row_values(export_polymake(b)).size() == 6);
}

TEST_CASE("the n = 4 export matches the golden file byte for byte") {
  const ExportBundle b = make_bundle(4, kHalf, unit_weights(4), false);
  CHECK(export_polymake(b) ==
        read_file(std::string(MULTIPLIHEDRA_GOLDEN_DIR) + "/j4_q_half_points.txt"));
}

TEST_CASE("the n = 4 point table, by value") {
  // The published table of the 21 vertices at q = 1/2 (with 2/2, 4/2 and
  // friends reduced).
  const char* table[21][3] = {
      {"1", "2", "3"},     {"1/2", "2", "3"},   {"1/2", "1", "3"},
      {"1/2", "1", "3/2"}, {"2", "1", "3"},     {"2", "1/2", "3"},
      {"1", "1/2", "3"},   {"1", "1/2", "3/2"}, {"3", "1", "2"},
      {"3", "1/2", "2"},   {"3", "1/2", "1"},   {"3/2", "1/2", "1"},
      {"3", "2", "1"},     {"3", "2", "1/2"},   {"3", "1", "1/2"},
      {"3/2", "1", "1/2"}, {"1", "4", "1"},     {"1/2", "4", "1"},
      {"1", "4", "1/2"},   {"1/2", "4", "1/2"}, {"1/2", "2", "1/2"}};
  std::multiset<Point> expected;
  for (const auto& row : table)
    expected.insert(Point{parse_rational(row[0]), parse_rational(row[1]),
                          parse_rational(row[2])});
  const ExportBundle b = make_bundle(4, kHalf, unit_weights(4), false);
  CHECK(row_values(export_polymake(b)) == expected);
}

TEST_CASE("OFF exports") {
  SUBCASE("hexagon: six vertices, one polygon") {
    const ExportBundle b = make_bundle(3, kHalf, unit_weights(3), true);
    const std::string off = export_off(b);
    std::istringstream in(off);
    std::string tag;
    int dim = 0, v = 0, f = 0, e = 0;
    in >> tag >> dim >> v >> f >> e;
    CHECK(tag == "nOFF");
    CHECK(dim == 2);
    CHECK(v == 6);
    CHECK(f == 1);
  }
  SUBCASE("J(4): 21 vertices, 13 faces") {
    const ExportBundle b = make_bundle(4, kHalf, unit_weights(4), true);
    std::istringstream in(export_off(b));
    std::string tag;
    int dim = 0, v = 0, f = 0, e = 0;
    in >> tag >> dim >> v >> f >> e;
    CHECK(dim == 3);
    CHECK(v == 21);
    CHECK(f == 13);
  }
  SUBCASE("no hull data means vertices only") {
    const ExportBundle b = make_bundle(4, kHalf, unit_weights(4), false);
    std::istringstream in(export_off(b));
    std::string tag;
    int dim = 0, v = 0, f = 0, e = 0;
    in >> tag >> dim >> v >> f >> e;
    CHECK(v == 21);
    CHECK(f == 0);
  }
  SUBCASE("n = 1 is a single vertex") {
    const ExportBundle b = make_bundle(1, kHalf, unit_weights(1), false);
    std::istringstream in(export_off(b));
    std::string tag;
    int dim = 0, v = 0, f = 0, e = 0;
    in >> tag >> dim >> v >> f >> e;
    CHECK(dim == 0);
    CHECK(v == 1);
    CHECK(f == 0);
  }
}

TEST_CASE("JSON round-trips byte for byte") {
  for (bool with_hull : {false, true}) {
    const ExportBundle b = make_bundle(3, Rat(1, 3), {1, 2, 1}, with_hull);
    const std::string once = export_json(b);
    const std::string twice = export_json(import_json(once));
    CHECK(once == twice);
  }
}

TEST_CASE("JSON import validates") {
  CHECK_THROWS_AS(import_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(import_json("{\"schema\":\"other/9\"}"), std::invalid_argument);
}

TEST_CASE("quotient mode deduplicates at q = 1 to the associahedron counts") {
  CHECK(quotient_points(2, Rat(1), unit_weights(2)).distinct.size() == 1);
  CHECK(quotient_points(3, Rat(1), unit_weights(3)).distinct.size() == 2);
  CHECK(quotient_points(4, Rat(1), unit_weights(4)).distinct.size() == 5);
  const auto r5 = quotient_points(5, Rat(1), unit_weights(5));
  CHECK(r5.raw_count == 80);
  CHECK(Int(r5.distinct.size()) == catalan(4));
}

TEST_CASE("quotient at q = 1 equals the independent associahedron points") {
  for (int n = 2; n <= 5; ++n) {
    const auto dedup = quotient_points(n, Rat(1), unit_weights(n));
    const auto loday = loday_points(n, unit_weights(n));
    CHECK(std::set<Point>(dedup.distinct.begin(), dedup.distinct.end()) ==
          std::set<Point>(loday.begin(), loday.end()));
  }
}

TEST_CASE("quotient at q = 0 reports counts without further claims") {
  const auto r = quotient_points(3, Rat(0), unit_weights(3));
  CHECK(r.raw_count == 6);
  CHECK(r.distinct.size() <= r.raw_count);
  CHECK_THROWS_AS(quotient_points(3, kHalf, unit_weights(3)), std::invalid_argument);
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rat(4, 2)) == "2");
  CHECK(format_rational(Rat(3, 2)) == "3/2");
  CHECK(format_rational(Rat(-1, 3)) == "-1/3");
  CHECK(parse_rational("2/2") == Rat(1));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}
