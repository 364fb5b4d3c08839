#include "doctest.h"

#include <string>
#include <vector>

#include "sfc/catalog.hpp"
#include "sfc/facet_spec.hpp"
#include "sfc/representation.hpp"
#include "sfc/tables.hpp"

using namespace sfc;

namespace {

BSpecification segment_in_the_plane() {
  // A flat construction: the "cells" are segments of the x axis, so the
  // witnesses can never span the plane.
  BSpecification spec;
  spec.dimension = 2;
  spec.branching = 2;
  spec.states.state_count = 1;
  spec.states.root_state = 0;
  spec.states.child_state = {{0, 0}};
  spec.vertex_counts = {2};
  spec.root_points = RationalMatrix::from_rows({{0, 1}, {0, 0}});
  spec.matrices = {{RationalMatrix::from_rows({{1, Rational(1, 2)}, {0, Rational(1, 2)}}),
                    RationalMatrix::from_rows({{Rational(1, 2), 0}, {Rational(1, 2), 1}})}};
  return spec;
}

} // namespace

TEST_CASE("the hilbert pre-representation picks the first node of each state") {
  auto spec = catalog_curve("hilbert2d").spec;
  auto pre = find_pre_representation(spec);
  REQUIRE(pre.size() == 4);
  CHECK(pre[0].digits == std::vector<int>{});
  CHECK(pre[1].digits == std::vector<int>{0});
  CHECK(pre[2].digits == std::vector<int>{3});
  CHECK(pre[3].digits == std::vector<int>{0, 3});
  for (int s = 0; s < 4; ++s) CHECK(pre[s].state == s);

  RegularityReport report;
  check_pre_regularity(spec, pre, report);
  CHECK(report.ok());
}

TEST_CASE("flat witnesses trip the dimension clause") {
  auto spec = segment_in_the_plane();
  auto pre = find_pre_representation(spec);
  RegularityReport report;
  check_pre_regularity(spec, pre, report);
  REQUIRE(!report.ok());
  CHECK(!report.clause_ok("P2'"));
  CHECK(report.violations[0].clause == "P2'");
}

TEST_CASE("the hilbert representation stores both orientations of each adjacency") {
  auto spec = catalog_curve("hilbert2d").spec;
  auto compiled = compile_curve(spec);
  REQUIRE(compiled.report.ok());
  const auto& rep = compiled.rep;
  CHECK(!rep.pairs.empty());

  // Every stored pair really meets in the named facets, point set for set.
  for (const auto& [triple, pair] : rep.pairs) {
    CHECK(triple[0] == pair.v.state);
    CHECK(triple[1] == pair.w.state);
    CHECK(triple[2] == pair.facet_v);
    auto left = facet_point_set(pair.v.points,
                                compiled.facets.index_sets[pair.v.state][pair.facet_v]);
    auto right = facet_point_set(pair.w.points,
                                 compiled.facets.index_sets[pair.w.state][pair.facet_w]);
    CHECK(left == right);
    // The mirrored triple is always present.
    CHECK(rep.pairs.count({pair.w.state, pair.v.state, pair.facet_w}) == 1);
  }

  // A meets B across A's right facet somewhere in the tree.
  CHECK(rep.pairs.count({1, 2, 1}) == 1);
}

TEST_CASE("the local hilbert collapse fails pair equivalence") {
  auto compiled = compile_curve(catalog_curve("hilbert2d_local").spec);
  REQUIRE(!compiled.report.ok());
  CHECK(!compiled.tables.has_value());
  CHECK(!compiled.report.clause_ok("R1'"));
  for (const auto& v : compiled.report.violations) CHECK(v.clause == "R1'");
}

TEST_CASE("gosper children leave their parent") {
  auto compiled = compile_curve(catalog_curve("gosper2d").spec);
  REQUIRE(!compiled.report.ok());
  CHECK(!compiled.report.clause_ok("R2'"));
  for (const auto& v : compiled.report.violations) {
    CHECK(v.clause == "R2'");
    CHECK(v.witness.find("sticks out of its parent") != std::string::npos);
  }
}

TEST_CASE("regular catalog curves pass every clause") {
  for (const char* name : {"morton2", "hilbert2d_global", "peano2_global", "sierpinski2d"}) {
    auto compiled = compile_curve(catalog_curve(name).spec);
    CHECK_MESSAGE(compiled.report.ok(), name);
    CHECK(compiled.tables.has_value());
  }
}
