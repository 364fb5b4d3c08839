#include "sfc/neighbor.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sfc {

namespace {

void check_facet(const CurveTables& t, int state, int facet) {
  if (facet < 0 || facet >= t.facet_counts[state])
    throw std::invalid_argument("facet " + std::to_string(facet) +
                                " out of range for state " + std::to_string(state));
}

int scratch_levels() {
  if (const char* env = std::getenv("SFC_SCRATCH_LEVELS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 64;
}

struct Scratch {
  std::vector<int> digits, states, facets;

  Scratch() {
    const int n = scratch_levels();
    digits.reserve(n);
    states.reserve(n + 1);
    facets.reserve(n);
  }
};

thread_local Scratch scratch;

// Digits and the state chain of a node, root state first.
void fill_chain(const CurveTables& t, int level, const BigInt& position,
                std::vector<int>& digits, std::vector<int>& states) {
  if (level < 0) throw std::invalid_argument("node level must be nonnegative");
  if (position < 0) throw std::invalid_argument("position out of range for level");
  digits.resize(level);
  states.resize(level + 1);
  BigInt rest = position;
  for (int i = level - 1; i >= 0; --i) {
    const BigInt digit = rest % t.branching;
    digits[i] = digit.convert_to<int>();
    rest /= t.branching;
  }
  if (rest != 0) throw std::invalid_argument("position out of range for level");
  states[0] = t.root_state;
  for (int i = 0; i < level; ++i) states[i + 1] = t.child_state[states[i]][digits[i]];
}

[[noreturn]] void throw_missing_omega() {
  throw std::logic_error("omega entry missing for an adjacency the tables admit");
}

} // namespace

std::optional<HistoryNode> neighbor(const CurveTables& t, const HistoryNode& v, int facet) {
  check_facet(t, v.state(), facet);
  if (v.level == 0) return std::nullopt;
  const BigInt digit = v.position % t.branching;
  const int j = digit.convert_to<int>();
  const int s = v.history->up->state;

  if (const int sibling = t.n(j, s, facet); sibling >= 0) {
    return HistoryNode{v.level, (v.position - j) + sibling,
                       std::make_shared<const StateChain>(
                           StateChain{t.child_state[s][sibling], v.history->up})};
  }

  const HistoryNode parent{v.level - 1, v.position / t.branching, v.history->up};
  const auto w = neighbor(t, parent, t.fp(j, s, facet));
  if (!w) return std::nullopt;
  const int i = t.omega(j, s, w->state(), facet);
  if (i < 0) throw_missing_omega();
  return HistoryNode{v.level, w->position * t.branching + i,
                     std::make_shared<const StateChain>(
                         StateChain{t.child_state[w->state()][i], w->history})};
}

std::optional<AlgebraicNode> neighbor(const CurveTables& t, const AlgebraicNode& v, int facet) {
  std::vector<int> digits, states;
  fill_chain(t, v.level, v.position, digits, states);
  std::shared_ptr<const StateChain> chain =
      std::make_shared<const StateChain>(StateChain{states[0], nullptr});
  for (int i = 0; i < v.level; ++i)
    chain = std::make_shared<const StateChain>(StateChain{states[i + 1], chain});
  const auto out = neighbor(t, HistoryNode{v.level, v.position, chain}, facet);
  if (!out) return std::nullopt;
  return AlgebraicNode{out->level, out->position, out->state()};
}

namespace {

// Shared two-loop core: ascend until a sibling answers, then mirror the
// descent through omega. The chain arrays describe the query node.
std::optional<AlgebraicNode> resolve_iterative(const CurveTables& t, int level,
                                               std::vector<int>& digits,
                                               std::vector<int>& states,
                                               std::vector<int>& facets, int facet) {
  facets.resize(level);
  int fc = facet;
  int hit = -1, sibling = -1;
  for (int tl = level - 1; tl >= 0; --tl) {
    const int j = digits[tl], s = states[tl];
    if (const int nn = t.n(j, s, fc); nn >= 0) {
      hit = tl;
      sibling = nn;
      break;
    }
    facets[tl] = fc;
    fc = t.fp(j, s, fc);
  }
  if (hit < 0) return std::nullopt;

  digits[hit] = sibling;
  int w = t.child_state[states[hit]][sibling];
  for (int tl = hit + 1; tl < level; ++tl) {
    const int d = t.omega(digits[tl], states[tl], w, facets[tl]);
    if (d < 0) throw_missing_omega();
    digits[tl] = d;
    w = t.child_state[w][d];
  }

  BigInt position = 0;
  for (int tl = 0; tl < level; ++tl) position = position * t.branching + digits[tl];
  return AlgebraicNode{level, position, w};
}

} // namespace

std::optional<AlgebraicNode> neighbor_iterative(const CurveTables& t, const AlgebraicNode& v,
                                                int facet) {
  auto& s = scratch;
  fill_chain(t, v.level, v.position, s.digits, s.states);
  check_facet(t, s.states[v.level], facet);
  return resolve_iterative(t, v.level, s.digits, s.states, s.facets, facet);
}

std::optional<AlgebraicNode> neighbor_multilevel(const MultiLevelTables& m,
                                                 const CurveTables& t, const AlgebraicNode& v,
                                                 int facet) {
  auto& s = scratch;
  fill_chain(t, v.level, v.position, s.digits, s.states);
  check_facet(t, s.states[v.level], facet);
  const int K = m.depth, b = t.branching;
  const int blocks = v.level / K, residual = v.level % K;

  // Ascent, whole blocks first (deepest block starts at level residual+i*K).
  s.facets.resize(blocks + residual);
  int fc = facet;
  int hit_block = -1, hit_level = -1, sibling = -1;
  for (int i = blocks - 1; i >= 0 && hit_block < 0; --i) {
    const int base = residual + i * K;
    int digit = 0;
    for (int tl = base; tl < base + K; ++tl) digit = digit * b + s.digits[tl];
    const int st = s.states[base];
    if (const int nn = m.n(digit, st, fc); nn >= 0) {
      hit_block = i;
      sibling = nn;
      break;
    }
    s.facets[residual + i] = fc;
    fc = m.fp(digit, st, fc);
  }
  if (hit_block < 0) {
    for (int tl = residual - 1; tl >= 0; --tl) {
      const int j = s.digits[tl], st = s.states[tl];
      if (const int nn = t.n(j, st, fc); nn >= 0) {
        hit_level = tl;
        sibling = nn;
        break;
      }
      s.facets[tl] = fc;
      fc = t.fp(j, st, fc);
    }
    if (hit_level < 0) return std::nullopt;
  }

  int w;  // neighbor-side state while descending
  int first_block;
  if (hit_block >= 0) {
    const int base = residual + hit_block * K;
    int digit = sibling;
    for (int tl = base + K - 1; tl >= base; --tl) {
      s.digits[tl] = digit % b;
      digit /= b;
    }
    w = m.block_state[s.states[base]][sibling];
    first_block = hit_block + 1;
  } else {
    s.digits[hit_level] = sibling;
    w = t.child_state[s.states[hit_level]][sibling];
    for (int tl = hit_level + 1; tl < residual; ++tl) {
      const int d = t.omega(s.digits[tl], s.states[tl], w, s.facets[tl]);
      if (d < 0) throw_missing_omega();
      s.digits[tl] = d;
      w = t.child_state[w][d];
    }
    first_block = 0;
  }

  for (int i = first_block; i < blocks; ++i) {
    const int base = residual + i * K;
    int digit = 0;
    for (int tl = base; tl < base + K; ++tl) digit = digit * b + s.digits[tl];
    const int d = m.omega(digit, s.states[base], w, s.facets[residual + i]);
    if (d < 0) throw_missing_omega();
    int rest = d;
    for (int tl = base + K - 1; tl >= base; --tl) {
      s.digits[tl] = rest % b;
      rest /= b;
    }
    w = m.block_state[w][d];
  }

  BigInt position = 0;
  for (int tl = 0; tl < v.level; ++tl) position = position * b + s.digits[tl];
  return AlgebraicNode{v.level, position, w};
}

int neighbor_depth(const CurveTables& t, const AlgebraicNode& v, int facet) {
  auto& s = scratch;
  fill_chain(t, v.level, v.position, s.digits, s.states);
  check_facet(t, s.states[v.level], facet);
  int fc = facet;
  for (int tl = v.level - 1; tl >= 0; --tl) {
    if (t.n(s.digits[tl], s.states[tl], fc) >= 0) return v.level - tl;
    fc = t.fp(s.digits[tl], s.states[tl], fc);
  }
  return v.level + 1;
}

DepthStats depth_histogram(const CurveTables& t, int level) {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  DepthStats stats;
  stats.depth_at_least.assign(level + 2, 0);
  stats.no_neighbor.assign(t.max_facets, 0);

  std::vector<int> digits(level), states(level + 1);
  states[0] = t.root_state;
  // Depth-first odometer over all level-l nodes; states follow the digits.
  auto sweep = [&](auto&& self, int at) -> void {
    if (at == level) {
      for (int f = 0; f < t.facet_counts[states[level]]; ++f) {
        int fc = f, depth = level + 1;
        for (int tl = level - 1; tl >= 0; --tl) {
          if (t.n(digits[tl], states[tl], fc) >= 0) {
            depth = level - tl;
            break;
          }
          fc = t.fp(digits[tl], states[tl], fc);
        }
        ++stats.depth_at_least[0];
        for (int k = 1; k <= depth && k <= level + 1; ++k) ++stats.depth_at_least[k];
        if (depth == level + 1) ++stats.no_neighbor[f];
      }
      return;
    }
    for (int j = 0; j < t.branching; ++j) {
      digits[at] = j;
      states[at + 1] = t.child_state[states[at]][j];
      self(self, at + 1);
    }
  };
  sweep(sweep, 0);
  return stats;
}

std::vector<std::optional<AlgebraicNode>> neighbor_with_wrong_state(const CurveTables& t,
                                                                    int level,
                                                                    const BigInt& position,
                                                                    int assumed_state) {
  if (!t.parent_state)
    throw std::runtime_error("state system is not invertible, ancestor states "
                             "cannot be reconstructed from an assumed state");
  if (assumed_state < 0 || assumed_state >= t.state_count)
    throw std::invalid_argument("assumed state out of range");

  std::vector<int> digits, states, facets;
  // Reuse the digit extraction, then overwrite the chain bottom-up.
  fill_chain(t, level, position, digits, states);
  states[level] = assumed_state;
  for (int i = level - 1; i >= 0; --i)
    states[i] = (*t.parent_state)[states[i + 1]][digits[i]];

  std::vector<std::optional<AlgebraicNode>> results(t.facet_counts[assumed_state]);
  for (int f = 0; f < (int)results.size(); ++f) {
    auto work_digits = digits;
    auto work_states = states;
    results[f] = resolve_iterative(t, level, work_digits, work_states, facets, f);
  }
  return results;
}

void traverse(const CurveTables& t, int max_level, const TraversalVisitor& visit) {
  if (max_level < 0) throw std::invalid_argument("level must be nonnegative");

  const AlgebraicNode root{0, 0, t.root_state};
  std::vector<std::optional<AlgebraicNode>> root_neighbors(t.facet_counts[t.root_state]);
  visit(root, root_neighbors);

  auto descend = [&](auto&& self, const AlgebraicNode& v,
                     const std::vector<std::optional<AlgebraicNode>>& neighbors) -> void {
    if (v.level == max_level) return;
    for (int j = 0; j < t.branching; ++j) {
      const int cs = t.child_state[v.state][j];
      AlgebraicNode child{v.level + 1, v.position * t.branching + j, cs};
      std::vector<std::optional<AlgebraicNode>> child_neighbors(t.facet_counts[cs]);
      for (int f = 0; f < t.facet_counts[cs]; ++f) {
        if (const int sibling = t.n(j, v.state, f); sibling >= 0) {
          child_neighbors[f] = AlgebraicNode{v.level + 1, v.position * t.branching + sibling,
                                             t.child_state[v.state][sibling]};
          continue;
        }
        const auto& across = neighbors[t.fp(j, v.state, f)];
        if (!across) continue;
        const int i = t.omega(j, v.state, across->state, f);
        if (i < 0) throw_missing_omega();
        child_neighbors[f] = AlgebraicNode{v.level + 1, across->position * t.branching + i,
                                           t.child_state[across->state][i]};
      }
      visit(child, child_neighbors);
      self(self, child, child_neighbors);
    }
  };
  descend(descend, root, root_neighbors);
}

} // namespace sfc
