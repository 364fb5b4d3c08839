#include "sfc/state_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sfc {

void validate(const StateSystem& s) {
  if (s.state_count < 1) throw std::invalid_argument("state_count must be positive");
  if (s.root_state < 0 || s.root_state >= s.state_count)
    throw std::invalid_argument("root_state out of range");
  if ((int)s.child_state.size() != s.state_count)
    throw std::invalid_argument("child_state needs one row per state");
  const int b = s.branching();
  if (b < 2) throw std::invalid_argument("branching must be at least 2");
  for (const auto& row : s.child_state) {
    if ((int)row.size() != b)
      throw std::invalid_argument("child_state rows must share one branching factor");
    for (int st : row)
      if (st < 0 || st >= s.state_count)
        throw std::invalid_argument("child_state entry out of range");
  }
}

int compute_state(const StateSystem& s, const std::vector<int>& digits) {
  int state = s.root_state;
  for (int digit : digits) state = s.child(state, digit);
  return state;
}

std::optional<std::vector<std::vector<int>>> parent_state_table(const StateSystem& s) {
  std::vector<std::vector<int>> parent(s.state_count, std::vector<int>(s.branching(), -1));
  for (int st = 0; st < s.state_count; ++st)
    for (int j = 0; j < s.branching(); ++j) {
      int& slot = parent[s.child(st, j)][j];
      if (slot >= 0) return std::nullopt;
      slot = st;
    }
  return parent;
}

std::vector<int> reachable_states(const StateSystem& s) {
  std::vector<bool> seen(s.state_count, false);
  std::deque<int> work{s.root_state};
  seen[s.root_state] = true;
  while (!work.empty()) {
    const int st = work.front();
    work.pop_front();
    for (int j = 0; j < s.branching(); ++j)
      if (!seen[s.child(st, j)]) {
        seen[s.child(st, j)] = true;
        work.push_back(s.child(st, j));
      }
  }
  std::vector<int> out;
  for (int st = 0; st < s.state_count; ++st)
    if (seen[st]) out.push_back(st);
  return out;
}

} // namespace sfc
