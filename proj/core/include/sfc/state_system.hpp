#ifndef SFC_STATE_SYSTEM_HPP
#define SFC_STATE_SYSTEM_HPP

/* The state automaton of a curve specification: which state each child cell
 * inherits from its parent's state and child index. */

#include <optional>
#include <vector>

namespace sfc {

struct StateSystem {
  int state_count = 1;
  int root_state = 0;
  std::vector<std::vector<int>> child_state;  // [state][digit]

  int branching() const { return child_state.empty() ? 0 : (int)child_state[0].size(); }
  int child(int state, int digit) const { return child_state[state][digit]; }
};

void validate(const StateSystem& s);  // throws std::invalid_argument

// State of the cell reached from the root by the given digits.
int compute_state(const StateSystem& s, const std::vector<int>& digits);

// Inverse lookup [child state][digit] -> parent state, available when
// state -> child(state, digit) is injective for every digit. Table blocks
// spanning several levels are keyed by deep states through this map.
std::optional<std::vector<std::vector<int>>> parent_state_table(const StateSystem& s);

std::vector<int> reachable_states(const StateSystem& s);

} // namespace sfc

#endif
