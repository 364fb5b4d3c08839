#ifndef SFC_GROUP_HPP
#define SFC_GROUP_HPP

/* The permutation group generated by the state transitions.
 *
 * Each digit j induces the map s -> child(s, j) on states. When every one of
 * these maps is a bijection they generate a subgroup of the symmetric group
 * on the states, which is a strong fingerprint of a curve's symmetry.
 */

#include <optional>
#include <vector>

#include "sfc/state_system.hpp"

namespace sfc {

struct StateGroupInfo {
  int order = 0;
  bool is_abelian = false;
  std::vector<std::vector<int>> generators;  // one map per digit, as images
  std::vector<std::vector<int>> elements;    // the closure, sorted
};

// Empty when some digit map fails to be a bijection.
std::optional<StateGroupInfo> state_group(const StateSystem& states);

} // namespace sfc

#endif
