#ifndef SFC_ISOMORPHISM_HPP
#define SFC_ISOMORPHISM_HPP

/* Conversions between node representations.
 *
 * All five node kinds describe the same underlying tree, so any node can be
 * rebuilt in another representation by extracting its digit path and
 * descending from the root of the target kind, one child step per level.
 */

#include <type_traits>
#include <vector>

#include "sfc/nodes.hpp"

namespace sfc {

std::vector<int> node_digits(const BSpecification& spec, const LevelPositionNode& n);
std::vector<int> node_digits(const BSpecification& spec, const AlgebraicNode& n);
std::vector<int> node_digits(const BSpecification& spec, const HistoryNode& n);
std::vector<int> node_digits(const BSpecification& spec, const GeometricNode& n);
std::vector<int> node_digits(const KDSpecification& kd, const CoordNode& n);

LevelPositionNode make_level_position(const BSpecification& spec, const std::vector<int>& digits);
AlgebraicNode make_algebraic(const BSpecification& spec, const std::vector<int>& digits);
HistoryNode make_history(const BSpecification& spec, const std::vector<int>& digits);
GeometricNode make_geometric(const BSpecification& spec, const std::vector<int>& digits);
CoordNode make_coord(const KDSpecification& kd, const std::vector<int>& digits);

template <class Dst, class Src>
Dst isomorphism_map(const BSpecification& spec, const Src& src) {
  const auto digits = node_digits(spec, src);
  if constexpr (std::is_same_v<Dst, LevelPositionNode>)
    return make_level_position(spec, digits);
  else if constexpr (std::is_same_v<Dst, AlgebraicNode>)
    return make_algebraic(spec, digits);
  else if constexpr (std::is_same_v<Dst, HistoryNode>)
    return make_history(spec, digits);
  else if constexpr (std::is_same_v<Dst, GeometricNode>)
    return make_geometric(spec, digits);
  else
    static_assert(!sizeof(Dst), "unsupported target node kind");
}

// Grid coordinates of a cell and back, for cube constructions. The digit
// walk applies one child placement per level; no geometry is evaluated.
std::vector<BigInt> position_to_coords(const KDSpecification& kd, int level,
                                       const BigInt& position);
BigInt coords_to_position(const KDSpecification& kd, int level,
                          const std::vector<BigInt>& coords);

} // namespace sfc

#endif
