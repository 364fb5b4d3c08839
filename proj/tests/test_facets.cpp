#include "doctest.h"

#include <vector>

#include "sfc/catalog.hpp"
#include "sfc/facet_spec.hpp"
#include "sfc/tables.hpp"

using namespace sfc;

TEST_CASE("cube constructions order facets axis by axis") {
  auto compiled = compile_curve(catalog_curve("hilbert2d").spec);
  REQUIRE(compiled.tables.has_value());
  const auto& facets = compiled.tables->facet_spec;
  REQUIRE(facets.index_sets.size() == 4);
  for (int state = 0; state < 4; ++state) {
    REQUIRE(facets.facet_count(state) == 4);
    // Left, right, down, up; columns hold standard-order cube corners.
    CHECK(facets.index_sets[state][0] == std::vector<int>{1, 3});
    CHECK(facets.index_sets[state][1] == std::vector<int>{2, 4});
    CHECK(facets.index_sets[state][2] == std::vector<int>{1, 2});
    CHECK(facets.index_sets[state][3] == std::vector<int>{3, 4});
  }
  CHECK(facets.max_facet_count() == 4);
}

TEST_CASE("three-dimensional cubes get six facets") {
  auto compiled = compile_curve(catalog_curve("morton3").spec);
  REQUIRE(compiled.tables.has_value());
  const auto& facets = compiled.tables->facet_spec;
  REQUIRE(facets.facet_count(0) == 6);
  CHECK(facets.index_sets[0][0] == std::vector<int>{1, 3, 5, 7});  // x = 0
  CHECK(facets.index_sets[0][1] == std::vector<int>{2, 4, 6, 8});  // x = 1
  CHECK(facets.index_sets[0][4] == std::vector<int>{1, 2, 3, 4});  // z = 0
  CHECK(facets.max_facet_count() == 6);
}

TEST_CASE("triangle facets are ordered lexicographically") {
  auto compiled = compile_curve(catalog_curve("sierpinski2d").spec);
  REQUIRE(compiled.tables.has_value());
  const auto& facets = compiled.tables->facet_spec;
  REQUIRE(facets.index_sets.size() == 1);
  REQUIRE(facets.facet_count(0) == 3);
  CHECK(facets.index_sets[0][0] == std::vector<int>{1, 2});
  CHECK(facets.index_sets[0][1] == std::vector<int>{1, 3});
  CHECK(facets.index_sets[0][2] == std::vector<int>{2, 3});
  CHECK(facets.max_facet_count() == 3);
}

TEST_CASE("facet point extraction selects and deduplicates columns") {
  PointMatrix q(2, 4);
  q.set_col(0, {Rational(0), Rational(0)});
  q.set_col(1, {Rational(1), Rational(0)});
  q.set_col(2, {Rational(0), Rational(0)});  // duplicate of column 0
  q.set_col(3, {Rational(0), Rational(1)});

  auto picked = facet_points(q, {1, 2});
  REQUIRE(picked.cols() == 2);
  CHECK(picked.col(0) == q.col(0));
  CHECK(picked.col(1) == q.col(1));

  auto set = facet_point_set(q, {1, 2, 3});
  REQUIRE(set.size() == 2);  // the duplicate collapses
  CHECK(set[0] == RVector{Rational(0), Rational(0)});
  CHECK(set[1] == RVector{Rational(1), Rational(0)});
}
