#include "doctest.h"

#include <vector>

#include "sfc/catalog.hpp"
#include "sfc/isomorphism.hpp"
#include "sfc/nodes.hpp"

using namespace sfc;

TEST_CASE("digit extraction is the same for every node kind") {
  auto entry = catalog_curve("hilbert2d");
  const auto& spec = entry.spec;
  const auto& kd = *entry.kd;
  const std::vector<int> digits = {2, 0, 3};

  CHECK(node_digits(spec, make_level_position(spec, digits)) == digits);
  CHECK(node_digits(spec, make_algebraic(spec, digits)) == digits);
  CHECK(node_digits(spec, make_history(spec, digits)) == digits);
  CHECK(node_digits(spec, make_geometric(spec, digits)) == digits);
  CHECK(node_digits(kd, make_coord(kd, digits)) == digits);
}

TEST_CASE("round trips through every pair of kinds") {
  auto spec = catalog_curve("hilbert2d").spec;
  const std::vector<int> digits = {1, 3, 0};
  auto history = make_history(spec, digits);

  auto algebraic = isomorphism_map<AlgebraicNode>(spec, history);
  CHECK(algebraic.level == 3);
  CHECK(algebraic.position == BigInt(28));
  CHECK(algebraic.state == 3);

  auto geometric = isomorphism_map<GeometricNode>(spec, algebraic);
  CHECK(geometric.points == node_point_matrix(spec, 3, BigInt(28)));

  auto back = isomorphism_map<HistoryNode>(spec, geometric);
  CHECK(back.position == history.position);
  CHECK(back.state() == history.state());

  auto plain = isomorphism_map<LevelPositionNode>(spec, back);
  CHECK(plain.level == 3);
  CHECK(plain.position == BigInt(28));
}

TEST_CASE("grid coordinates of hilbert cells") {
  auto kd = *catalog_curve("hilbert2d").kd;
  CHECK(position_to_coords(kd, 2, 1) == std::vector<BigInt>{1, 0});
  CHECK(position_to_coords(kd, 2, 2) == std::vector<BigInt>{1, 1});
  CHECK(position_to_coords(kd, 2, 14) == std::vector<BigInt>{2, 0});
  CHECK(position_to_coords(kd, 0, 0) == std::vector<BigInt>{0, 0});

  for (int level = 0; level <= 3; ++level)
    for (BigInt pos = 0; pos < BigInt(1) << (2 * level); ++pos)
      CHECK(coords_to_position(kd, level, position_to_coords(kd, level, pos)) == pos);
}

TEST_CASE("grid coordinates of morton cells follow bit interleaving") {
  auto kd = *catalog_curve("morton2").kd;
  // Digit bit 0 is the x coordinate.
  CHECK(position_to_coords(kd, 1, 1) == std::vector<BigInt>{1, 0});
  CHECK(position_to_coords(kd, 1, 2) == std::vector<BigInt>{0, 1});
  CHECK(coords_to_position(kd, 1, {1, 1}) == BigInt(3));
  CHECK(coords_to_position(kd, 2, {2, 1}) == BigInt(6));
}

TEST_CASE("coordinates point at the cell's corner in the unit cube") {
  // The coordinate node of a cube construction names the grid cell whose
  // scaled copy is exactly the node's polytope.
  for (const char* name : {"hilbert2d", "peano2", "morton3"}) {
    auto entry = catalog_curve(name);
    const auto& spec = entry.spec;
    const auto& kd = *entry.kd;
    const int k = kd.refinement;
    for (int level = 0; level <= 2; ++level) {
      BigInt count = 1;
      for (int i = 0; i < level; ++i) count *= spec.branching;
      BigInt side = 1;
      for (int i = 0; i < level; ++i) side *= k;
      for (BigInt pos = 0; pos < count; ++pos) {
        auto coords = position_to_coords(kd, level, pos);
        auto points = node_point_matrix(spec, level, pos);
        // Minimum corner over the columns, coordinate by coordinate.
        for (int axis = 0; axis < kd.dimension; ++axis) {
          Rational lo = points.at(axis, 0);
          for (int c = 1; c < points.cols(); ++c)
            if (points.at(axis, c) < lo) lo = points.at(axis, c);
          CHECK(lo == Rational(BigInt(coords[axis]).convert_to<long long>(),
                               side.convert_to<long long>()));
        }
      }
    }
  }
}

TEST_CASE("coordinate moves stay inside the grid") {
  auto kd = *catalog_curve("peano2").kd;
  CHECK_THROWS_AS(coords_to_position(kd, 1, {3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(coords_to_position(kd, 1, {0}), std::invalid_argument);
}
