#ifndef SFC_NODES_HPP
#define SFC_NODES_HPP

/* Cells of the refinement tree, in several interchangeable representations.
 *
 * A cell at level l is one of b^l nodes, numbered along the curve. The level
 * -position node carries just that pair; the algebraic node adds the state;
 * the history node keeps the whole state chain from the root as an immutable
 * shared list, so child and parent moves never copy it; the coordinate node
 * (cube constructions only) holds integer grid coordinates; the geometric
 * node carries the cell's point matrix. Positions are arbitrary-precision,
 * deep levels are fine.
 *
 * Parent moves on algebraic and coordinate nodes must reconstruct the parent
 * state, which is only possible when state -> child state is invertible per
 * digit; non-invertible systems get an error pointing at history nodes.
 */

#include <memory>
#include <vector>

#include "sfc/curve_spec.hpp"
#include "sfc/kd_spec.hpp"
#include "sfc/rational.hpp"

namespace sfc {

struct LevelPositionNode {
  int level = 0;
  BigInt position = 0;
};

struct AlgebraicNode {
  int level = 0;
  BigInt position = 0;
  int state = 0;
};

// Immutable cons cell; deepest state first, `up` walks toward the root.
struct StateChain {
  int state;
  std::shared_ptr<const StateChain> up;
};

struct HistoryNode {
  int level = 0;
  BigInt position = 0;
  std::shared_ptr<const StateChain> history;  // length level+1

  int state() const { return history->state; }
};

// Grid cell of a k^d cube construction: coords[i] in {0 .. k^level - 1}.
struct CoordNode {
  int level = 0;
  std::vector<BigInt> coords;
  int state = 0;
};

struct GeometricNode {
  int level = 0;
  BigInt position = 0;
  int state = 0;
  PointMatrix points;
};

// Digits j_1..j_l from the root to the cell, coarsest first.
std::vector<int> position_digits(const BigInt& position, int level, int branching);
BigInt digits_position(const std::vector<int>& digits, int branching);

int compute_state(const BSpecification& spec, int level, const BigInt& position);

// Q(v): the cell's points in the root frame.
PointMatrix node_points(const BSpecification& spec, const std::vector<int>& digits);
PointMatrix node_point_matrix(const BSpecification& spec, int level, const BigInt& position);

LevelPositionNode tree_child(const BSpecification& spec, const LevelPositionNode& n, int index);
LevelPositionNode tree_parent(const BSpecification& spec, const LevelPositionNode& n);
int tree_index(const BSpecification& spec, const LevelPositionNode& n);

AlgebraicNode algebraic_root(const BSpecification& spec);
AlgebraicNode tree_child(const BSpecification& spec, const AlgebraicNode& n, int index);
AlgebraicNode tree_parent(const BSpecification& spec, const AlgebraicNode& n);
int tree_index(const BSpecification& spec, const AlgebraicNode& n);

HistoryNode history_root(const BSpecification& spec);
// Runs the chain from a forced root state instead of the real one.
HistoryNode history_root(const BSpecification& spec, int assumed_root_state);
HistoryNode tree_child(const BSpecification& spec, const HistoryNode& n, int index);
HistoryNode tree_parent(const BSpecification& spec, const HistoryNode& n);
int tree_index(const BSpecification& spec, const HistoryNode& n);

CoordNode coord_root(const KDSpecification& kd);
CoordNode tree_child(const KDSpecification& kd, const CoordNode& n, int index);
CoordNode tree_parent(const KDSpecification& kd, const CoordNode& n);
int tree_index(const KDSpecification& kd, const CoordNode& n);

GeometricNode geometric_root(const BSpecification& spec);
GeometricNode tree_child(const BSpecification& spec, const GeometricNode& n, int index);
GeometricNode tree_parent(const BSpecification& spec, const GeometricNode& n);  // O(level)
int tree_index(const BSpecification& spec, const GeometricNode& n);

} // namespace sfc

#endif
