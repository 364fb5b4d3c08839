#include "sfc/group.hpp"

#include <algorithm>
#include <set>

namespace sfc {

namespace {

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t s = 0; s < f.size(); ++s) out[s] = f[g[s]];
  return out;
}

} // namespace

std::optional<StateGroupInfo> state_group(const StateSystem& states) {
  const int count = states.state_count;
  const int b = states.branching();

  StateGroupInfo info;
  info.generators.reserve(b);
  for (int j = 0; j < b; ++j) {
    std::vector<int> sigma(count);
    std::vector<bool> hit(count, false);
    for (int s = 0; s < count; ++s) {
      sigma[s] = states.child(s, j);
      if (hit[sigma[s]]) return std::nullopt;
      hit[sigma[s]] = true;
    }
    info.generators.push_back(std::move(sigma));
  }

  std::vector<int> identity(count);
  for (int s = 0; s < count; ++s) identity[s] = s;
  std::set<std::vector<int>> closure = {identity};
  std::vector<std::vector<int>> fresh = {identity};
  while (!fresh.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : fresh)
      for (const auto& gen : info.generators) {
        auto h = compose(gen, g);
        if (closure.insert(h).second) next.push_back(std::move(h));
      }
    fresh = std::move(next);
  }

  info.elements.assign(closure.begin(), closure.end());
  info.order = (int)info.elements.size();
  info.is_abelian = true;
  for (size_t a = 0; a < info.elements.size() && info.is_abelian; ++a)
    for (size_t b2 = a + 1; b2 < info.elements.size(); ++b2)
      if (compose(info.elements[a], info.elements[b2]) !=
          compose(info.elements[b2], info.elements[a])) {
        info.is_abelian = false;
        break;
      }
  return info;
}

} // namespace sfc
