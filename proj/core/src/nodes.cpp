#include "sfc/nodes.hpp"

#include <stdexcept>
#include <string>

namespace sfc {

namespace {

void check_level(int level) {
  if (level < 0) throw std::invalid_argument("node level must be nonnegative");
}

BigInt level_capacity(int level, int branching) {
  BigInt cap = 1;
  for (int i = 0; i < level; ++i) cap *= branching;
  return cap;
}

[[noreturn]] void throw_not_invertible() {
  throw std::runtime_error(
      "state system is not invertible, parent states cannot be reconstructed; "
      "use a history node instead");
}

// S^p as a [child_state][digit] table, or an error for non-invertible systems.
std::vector<std::vector<int>> require_parent_table(const StateSystem& states) {
  auto table = parent_state_table(states);
  if (!table) throw_not_invertible();
  return *table;
}

} // namespace

std::vector<int> position_digits(const BigInt& position, int level, int branching) {
  check_level(level);
  if (position < 0 || position >= level_capacity(level, branching))
    throw std::invalid_argument("position out of range for level");
  std::vector<int> digits(level);
  BigInt rest = position;
  for (int i = level - 1; i >= 0; --i) {
    const BigInt digit = rest % branching;
    digits[i] = digit.convert_to<int>();
    rest /= branching;
  }
  return digits;
}

BigInt digits_position(const std::vector<int>& digits, int branching) {
  BigInt position = 0;
  for (int digit : digits) {
    if (digit < 0 || digit >= branching)
      throw std::invalid_argument("digit out of range");
    position = position * branching + digit;
  }
  return position;
}

int compute_state(const BSpecification& spec, int level, const BigInt& position) {
  const auto digits = position_digits(position, level, spec.branching);
  return compute_state(spec.states, digits);
}

PointMatrix node_points(const BSpecification& spec, const std::vector<int>& digits) {
  PointMatrix points = spec.root_points;
  int state = spec.states.root_state;
  for (int digit : digits) {
    points = points.mul(spec.matrix(state, digit));
    state = spec.states.child(state, digit);
  }
  return points;
}

PointMatrix node_point_matrix(const BSpecification& spec, int level, const BigInt& position) {
  return node_points(spec, position_digits(position, level, spec.branching));
}

LevelPositionNode tree_child(const BSpecification& spec, const LevelPositionNode& n, int index) {
  if (index < 0 || index >= spec.branching)
    throw std::invalid_argument("child index out of range");
  return {n.level + 1, n.position * spec.branching + index};
}

LevelPositionNode tree_parent(const BSpecification& spec, const LevelPositionNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no parent");
  return {n.level - 1, n.position / spec.branching};
}

int tree_index(const BSpecification& spec, const LevelPositionNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no child index");
  const BigInt digit = n.position % spec.branching;
  return digit.convert_to<int>();
}

AlgebraicNode algebraic_root(const BSpecification& spec) {
  return {0, 0, spec.states.root_state};
}

AlgebraicNode tree_child(const BSpecification& spec, const AlgebraicNode& n, int index) {
  if (index < 0 || index >= spec.branching)
    throw std::invalid_argument("child index out of range");
  return {n.level + 1, n.position * spec.branching + index, spec.states.child(n.state, index)};
}

AlgebraicNode tree_parent(const BSpecification& spec, const AlgebraicNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no parent");
  const auto table = require_parent_table(spec.states);
  const BigInt digit = n.position % spec.branching;
  return {n.level - 1, n.position / spec.branching,
          table[n.state][digit.convert_to<int>()]};
}

int tree_index(const BSpecification& spec, const AlgebraicNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no child index");
  const BigInt digit = n.position % spec.branching;
  return digit.convert_to<int>();
}

HistoryNode history_root(const BSpecification& spec) {
  return history_root(spec, spec.states.root_state);
}

HistoryNode history_root(const BSpecification& spec, int assumed_root_state) {
  if (assumed_root_state < 0 || assumed_root_state >= spec.states.state_count)
    throw std::invalid_argument("root state out of range");
  return {0, 0, std::make_shared<const StateChain>(StateChain{assumed_root_state, nullptr})};
}

HistoryNode tree_child(const BSpecification& spec, const HistoryNode& n, int index) {
  if (index < 0 || index >= spec.branching)
    throw std::invalid_argument("child index out of range");
  const int child_state = spec.states.child(n.state(), index);
  return {n.level + 1, n.position * spec.branching + index,
          std::make_shared<const StateChain>(StateChain{child_state, n.history})};
}

HistoryNode tree_parent(const BSpecification& spec, const HistoryNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no parent");
  return {n.level - 1, n.position / spec.branching, n.history->up};
}

int tree_index(const BSpecification& spec, const HistoryNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no child index");
  const BigInt digit = n.position % spec.branching;
  return digit.convert_to<int>();
}

CoordNode coord_root(const KDSpecification& kd) {
  return {0, std::vector<BigInt>(kd.dimension, 0), kd.states.root_state};
}

CoordNode tree_child(const KDSpecification& kd, const CoordNode& n, int index) {
  if (index < 0 || index >= kd.states.branching())
    throw std::invalid_argument("child index out of range");
  CoordNode child;
  child.level = n.level + 1;
  child.coords.resize(kd.dimension);
  const auto& cell = kd.child_order[n.state][index];
  for (int i = 0; i < kd.dimension; ++i)
    child.coords[i] = n.coords[i] * kd.refinement + cell[i];
  child.state = kd.states.child(n.state, index);
  return child;
}

namespace {

// The digit and parent state a coordinate node was reached through. With an
// invertible state system the pair is determined by the cell within the
// parent plus the node's own state.
std::pair<int, int> coord_step_back(const KDSpecification& kd, const CoordNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no parent");
  const auto table = require_parent_table(kd.states);
  std::vector<int> cell(kd.dimension);
  for (int i = 0; i < kd.dimension; ++i) {
    const BigInt digit = n.coords[i] % kd.refinement;
    cell[i] = digit.convert_to<int>();
  }
  int found_index = -1, found_state = -1;
  for (int j = 0; j < kd.states.branching(); ++j) {
    const int parent = table[n.state][j];
    if (kd.child_order[parent][j] == cell) {
      if (found_index >= 0)
        throw std::logic_error("ambiguous parent for coordinate node");
      found_index = j;
      found_state = parent;
    }
  }
  if (found_index < 0)
    throw std::invalid_argument("coordinates do not match any child cell");
  return {found_index, found_state};
}

} // namespace

CoordNode tree_parent(const KDSpecification& kd, const CoordNode& n) {
  const auto [index, state] = coord_step_back(kd, n);
  (void)index;
  CoordNode parent;
  parent.level = n.level - 1;
  parent.coords.resize(kd.dimension);
  for (int i = 0; i < kd.dimension; ++i)
    parent.coords[i] = n.coords[i] / kd.refinement;
  parent.state = state;
  return parent;
}

int tree_index(const KDSpecification& kd, const CoordNode& n) {
  return coord_step_back(kd, n).first;
}

GeometricNode geometric_root(const BSpecification& spec) {
  return {0, 0, spec.states.root_state, spec.root_points};
}

GeometricNode tree_child(const BSpecification& spec, const GeometricNode& n, int index) {
  if (index < 0 || index >= spec.branching)
    throw std::invalid_argument("child index out of range");
  return {n.level + 1, n.position * spec.branching + index,
          spec.states.child(n.state, index), n.points.mul(spec.matrix(n.state, index))};
}

GeometricNode tree_parent(const BSpecification& spec, const GeometricNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no parent");
  auto digits = position_digits(n.position, n.level, spec.branching);
  digits.pop_back();
  GeometricNode parent;
  parent.level = n.level - 1;
  parent.position = n.position / spec.branching;
  parent.state = compute_state(spec.states, digits);
  parent.points = node_points(spec, digits);
  return parent;
}

int tree_index(const BSpecification& spec, const GeometricNode& n) {
  if (n.level == 0) throw std::invalid_argument("the root has no child index");
  const BigInt digit = n.position % spec.branching;
  return digit.convert_to<int>();
}

} // namespace sfc
