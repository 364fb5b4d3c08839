#include "sfc/isomorphism.hpp"

#include <stdexcept>

namespace sfc {

std::vector<int> node_digits(const BSpecification& spec, const LevelPositionNode& n) {
  return position_digits(n.position, n.level, spec.branching);
}

std::vector<int> node_digits(const BSpecification& spec, const AlgebraicNode& n) {
  return position_digits(n.position, n.level, spec.branching);
}

std::vector<int> node_digits(const BSpecification& spec, const HistoryNode& n) {
  return position_digits(n.position, n.level, spec.branching);
}

std::vector<int> node_digits(const BSpecification& spec, const GeometricNode& n) {
  return position_digits(n.position, n.level, spec.branching);
}

std::vector<int> node_digits(const KDSpecification& kd, const CoordNode& n) {
  const int k = kd.refinement, b = kd.states.branching();
  if ((int)n.coords.size() != kd.dimension)
    throw std::invalid_argument("coordinate count does not match the dimension");
  BigInt scale = 1;
  for (int i = 0; i < n.level; ++i) scale *= k;
  for (const auto& c : n.coords)
    if (c < 0 || c >= scale) throw std::invalid_argument("coordinates out of range for level");

  std::vector<int> digits(n.level);
  std::vector<int> cell(kd.dimension);
  int state = kd.states.root_state;
  for (int at = 0; at < n.level; ++at) {
    scale /= k;
    for (int i = 0; i < kd.dimension; ++i) {
      const BigInt c = (n.coords[i] / scale) % k;
      cell[i] = c.convert_to<int>();
    }
    int digit = -1;
    for (int j = 0; j < b; ++j)
      if (kd.child_order[state][j] == cell) { digit = j; break; }
    if (digit < 0) throw std::logic_error("child placement misses a grid cell");
    digits[at] = digit;
    state = kd.states.child(state, digit);
  }
  return digits;
}

LevelPositionNode make_level_position(const BSpecification& spec, const std::vector<int>& digits) {
  LevelPositionNode n;
  for (int d : digits) n = tree_child(spec, n, d);
  return n;
}

AlgebraicNode make_algebraic(const BSpecification& spec, const std::vector<int>& digits) {
  AlgebraicNode n = algebraic_root(spec);
  for (int d : digits) n = tree_child(spec, n, d);
  return n;
}

HistoryNode make_history(const BSpecification& spec, const std::vector<int>& digits) {
  HistoryNode n = history_root(spec);
  for (int d : digits) n = tree_child(spec, n, d);
  return n;
}

GeometricNode make_geometric(const BSpecification& spec, const std::vector<int>& digits) {
  GeometricNode n = geometric_root(spec);
  for (int d : digits) n = tree_child(spec, n, d);
  return n;
}

CoordNode make_coord(const KDSpecification& kd, const std::vector<int>& digits) {
  CoordNode n = coord_root(kd);
  for (int d : digits) n = tree_child(kd, n, d);
  return n;
}

std::vector<BigInt> position_to_coords(const KDSpecification& kd, int level,
                                       const BigInt& position) {
  const auto digits = position_digits(position, level, kd.states.branching());
  return make_coord(kd, digits).coords;
}

BigInt coords_to_position(const KDSpecification& kd, int level,
                          const std::vector<BigInt>& coords) {
  CoordNode n;
  n.level = level;
  n.coords = coords;
  return digits_position(node_digits(kd, n), kd.states.branching());
}

} // namespace sfc
