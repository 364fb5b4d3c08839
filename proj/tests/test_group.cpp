#include "doctest.h"

#include <algorithm>
#include <vector>

#include "sfc/catalog.hpp"
#include "sfc/group.hpp"

using namespace sfc;

TEST_CASE("the hilbert transitions generate the klein four-group") {
  auto spec = catalog_curve("hilbert2d").spec;
  auto info = state_group(spec.states);
  REQUIRE(info.has_value());
  CHECK(info->order == 4);
  CHECK(info->is_abelian);

  // Identity and the three double transpositions, in sorted order.
  const std::vector<std::vector<int>> expected = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CHECK(info->elements == expected);

  // The digit maps themselves are rows of the transition table.
  REQUIRE(info->generators.size() == 4);
  for (int j = 0; j < 4; ++j)
    for (int s = 0; s < 4; ++s)
      CHECK(info->generators[j][s] == spec.states.child(s, j));
}

TEST_CASE("a one-state curve has the trivial group") {
  auto info = state_group(catalog_curve("morton2").spec.states);
  REQUIRE(info.has_value());
  CHECK(info->order == 1);
  CHECK(info->is_abelian);
  CHECK(info->elements == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("the spatial hilbert group is larger and non-abelian") {
  auto spec = catalog_curve("hilbert3d").spec;
  auto info = state_group(spec.states);
  REQUIRE(info.has_value());
  CHECK(info->order == 12);
  CHECK(!info->is_abelian);
  // Closure sanity: composing any two elements stays inside.
  for (const auto& g : info->elements)
    for (const auto& h : info->elements) {
      std::vector<int> gh(g.size());
      for (size_t i = 0; i < g.size(); ++i) gh[i] = g[h[i]];
      CHECK(std::binary_search(info->elements.begin(), info->elements.end(), gh));
    }
}

TEST_CASE("non-bijective transitions have no group") {
  auto spec = catalog_curve("gosper2d").spec;
  CHECK(!state_group(spec.states).has_value());
}

TEST_CASE("peano transitions form an elementary abelian group") {
  auto info = state_group(catalog_curve("peano2").spec.states);
  REQUIRE(info.has_value());
  CHECK(info->order == 4);
  CHECK(info->is_abelian);
  // Every element squares to the identity.
  for (const auto& g : info->elements)
    for (size_t i = 0; i < g.size(); ++i) CHECK(g[g[i]] == (int)i);
}
