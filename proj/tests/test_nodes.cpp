#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "sfc/catalog.hpp"
#include "sfc/nodes.hpp"

using namespace sfc;

TEST_CASE("positions and digit paths are inverse to each other") {
  CHECK(position_digits(28, 3, 4) == std::vector<int>{1, 3, 0});
  CHECK(position_digits(1, 2, 4) == std::vector<int>{0, 1});
  CHECK(position_digits(0, 3, 2) == std::vector<int>{0, 0, 0});
  CHECK(digits_position({1, 3, 0}, 4) == BigInt(28));
  CHECK(digits_position({}, 4) == BigInt(0));
  for (int p = 0; p < 81; ++p)
    CHECK(digits_position(position_digits(p, 4, 3), 3) == BigInt(p));
  CHECK_THROWS_AS(position_digits(16, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(position_digits(-1, 2, 4), std::invalid_argument);
}

TEST_CASE("states along the hilbert tree") {
  auto spec = catalog_curve("hilbert2d").spec;
  CHECK(compute_state(spec, 0, 0) == 0);
  CHECK(compute_state(spec, 2, 1) == 1);
  CHECK(compute_state(spec, 2, 2) == 1);
  CHECK(compute_state(spec, 2, 14) == 2);
  CHECK(compute_state(spec, 3, 28) == 3);
}

TEST_CASE("level-position nodes walk the abstract tree") {
  auto spec = catalog_curve("hilbert2d").spec;
  LevelPositionNode n{2, 9};
  auto child = tree_child(spec, n, 3);
  CHECK(child.level == 3);
  CHECK(child.position == BigInt(39));
  CHECK(tree_index(spec, child) == 3);
  auto back = tree_parent(spec, child);
  CHECK(back.level == 2);
  CHECK(back.position == BigInt(9));
  CHECK_THROWS_AS(tree_parent(spec, LevelPositionNode{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tree_child(spec, n, 4), std::invalid_argument);
}

TEST_CASE("algebraic nodes carry states through child and parent moves") {
  auto spec = catalog_curve("hilbert2d").spec;
  auto node = algebraic_root(spec);
  CHECK(node.state == 0);
  node = tree_child(spec, node, 0);
  CHECK(node.state == 1);
  node = tree_child(spec, node, 1);
  CHECK(node.level == 2);
  CHECK(node.position == BigInt(1));
  CHECK(node.state == 1);
  auto parent = tree_parent(spec, node);
  CHECK(parent.state == 1);
  CHECK(parent.position == BigInt(0));
}

TEST_CASE("algebraic parents need an invertible state system") {
  auto spec = catalog_curve("gosper2d").spec;
  auto node = tree_child(spec, algebraic_root(spec), 2);
  CHECK_THROWS_AS(tree_parent(spec, node), std::runtime_error);
}

TEST_CASE("history nodes share their tails structurally") {
  auto spec = catalog_curve("hilbert2d").spec;
  auto root = history_root(spec);
  auto a = tree_child(spec, root, 2);
  auto b = tree_child(spec, a, 1);
  CHECK(b.level == 2);
  CHECK(b.position == BigInt(9));
  CHECK(b.state() == compute_state(spec, 2, 9));

  // The child's chain extends the parent's chain without copying it.
  CHECK(b.history->up.get() == a.history.get());
  CHECK(a.history->up.get() == root.history.get());
  auto back = tree_parent(spec, b);
  CHECK(back.history.get() == a.history.get());
  CHECK(back.position == a.position);

  // Siblings branch off the same shared tail.
  auto sibling = tree_child(spec, a, 3);
  CHECK(sibling.history->up.get() == a.history.get());
}

TEST_CASE("history nodes work for non-invertible systems") {
  auto spec = catalog_curve("gosper2d").spec;
  auto node = history_root(spec);
  for (int j : {2, 5, 1}) node = tree_child(spec, node, j);
  CHECK(node.level == 3);
  auto up = tree_parent(spec, node);
  CHECK(up.level == 2);
  CHECK(up.state() == compute_state(spec, 2, BigInt(2 * 7 + 5)));
}

TEST_CASE("an assumed root state reroutes the whole chain") {
  auto spec = catalog_curve("hilbert2d").spec;
  auto forced = history_root(spec, 2);
  CHECK(forced.state() == 2);
  auto child = tree_child(spec, forced, 0);
  CHECK(child.state() == spec.states.child(2, 0));
  CHECK_THROWS_AS(history_root(spec, 9), std::invalid_argument);
}

TEST_CASE("coordinate nodes track grid cells") {
  auto kd = *catalog_curve("hilbert2d").kd;
  auto node = coord_root(kd);
  CHECK(node.level == 0);
  CHECK(node.coords == std::vector<BigInt>{0, 0});

  // Digits 0, 1 lead to position 1 = cell (1, 0) of the 4x4 grid.
  node = tree_child(kd, node, 0);
  node = tree_child(kd, node, 1);
  CHECK(node.level == 2);
  CHECK(node.coords == std::vector<BigInt>{1, 0});
  CHECK(tree_index(kd, node) == 1);
  auto parent = tree_parent(kd, node);
  CHECK(parent.coords == std::vector<BigInt>{0, 0});
  CHECK(parent.state == compute_state(kd.states, {0}));
}

TEST_CASE("geometric nodes carry their cell polytopes") {
  auto spec = catalog_curve("hilbert2d").spec;
  auto root = geometric_root(spec);
  CHECK(root.points == spec.root_points);

  auto child = tree_child(spec, root, 2);
  auto grand = tree_child(spec, child, 3);
  CHECK(grand.points == node_point_matrix(spec, 2, BigInt(2 * 4 + 3)));
  auto back = tree_parent(spec, grand);
  CHECK(back.points == child.points);
  CHECK(back.state == child.state);
}

TEST_CASE("node points match the digit fold") {
  auto spec = catalog_curve("sierpinski2d").spec;
  auto via_digits = node_points(spec, {1, 0, 1});
  auto via_position = node_point_matrix(spec, 3, BigInt(5));
  CHECK(via_digits == via_position);
}
