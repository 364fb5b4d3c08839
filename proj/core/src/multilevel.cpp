#include "sfc/multilevel.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sfc {

MultiLevelTables build_multilevel(const CurveTables& tables, int depth) {
  if (depth < 1) throw std::invalid_argument("block depth must be at least 1");
  const int S = tables.state_count, b = tables.branching, F = tables.max_facets;

  long long block = 1;
  for (int i = 0; i < depth; ++i) {
    block *= b;
    if (block * S * S * F > (1LL << 26))
      throw std::invalid_argument("block depth too large for the table budget");
  }

  MultiLevelTables m;
  m.depth = depth;
  m.branching = b;
  m.block = (int)block;
  m.state_count = S;
  m.max_facets = F;
  m.facet_counts = tables.facet_counts;

  m.block_state.assign(S, std::vector<int>(m.block));
  for (int s = 0; s < S; ++s)
    for (int i = 0; i < m.block; ++i) {
      int state = s, rest = i;
      std::vector<int> digits(depth);
      for (int t = depth - 1; t >= 0; --t) {
        digits[t] = rest % b;
        rest /= b;
      }
      for (int d : digits) state = tables.child_state[state][d];
      m.block_state[s][i] = state;
    }

  m.block_parent_state.emplace(S, std::vector<int>(m.block, -1));
  bool invertible = true;
  for (int i = 0; i < m.block && invertible; ++i) {
    std::vector<int> seen(S, -1);
    for (int s = 0; s < S; ++s) {
      const int deep = m.block_state[s][i];
      if (seen[deep] >= 0) { invertible = false; break; }
      seen[deep] = s;
      (*m.block_parent_state)[deep][i] = s;
    }
  }
  if (!invertible) m.block_parent_state.reset();

  m.n_table.assign(S * m.block * F, -1);
  m.fp_table.assign(S * m.block * F, -1);
  m.omega_table.assign(S * S * m.block * F, -1);

  std::vector<int> digits(depth), chain(depth + 1);
  for (int s = 0; s < S; ++s)
    for (int i = 0; i < m.block; ++i) {
      int rest = i;
      for (int t = depth - 1; t >= 0; --t) {
        digits[t] = rest % b;
        rest /= b;
      }
      chain[0] = s;
      for (int t = 0; t < depth; ++t) chain[t + 1] = tables.child_state[chain[t]][digits[t]];
      const int node_state = chain[depth];

      for (int f = 0; f < tables.facet_counts[node_state]; ++f) {
        // Ascend through the block, one (digit, parent state, facet) record
        // per level, until a sibling answers or the block root is reached.
        std::vector<std::array<int, 3>> stack;
        int facet = f;
        int hit_level = -1, hit_digit = -1;
        for (int t = depth - 1; t >= 0; --t) {
          const int j = digits[t], ps = chain[t];
          const int sibling = tables.n(j, ps, facet);
          if (sibling >= 0) {
            hit_level = t;
            hit_digit = sibling;
            break;
          }
          stack.push_back({j, ps, facet});
          facet = tables.fp(j, ps, facet);
          if (facet < 0) throw std::logic_error("table row defines neither n nor fp");
        }

        const int slot = (s * m.block + i) * F + f;
        if (hit_level >= 0) {
          // The neighbor lives in this block: keep the common prefix, swap
          // in the sibling digit, mirror the rest through omega.
          long long out = 0;
          for (int t = 0; t < hit_level; ++t) out = out * b + digits[t];
          out = out * b + hit_digit;
          int w = tables.child_state[chain[hit_level]][hit_digit];
          for (int t = hit_level + 1; t < depth; ++t) {
            const auto rec = stack[depth - 1 - t];
            const int d = tables.omega(rec[0], rec[1], w, rec[2]);
            if (d < 0) throw std::logic_error("omega missing during block descent");
            out = out * b + d;
            w = tables.child_state[w][d];
          }
          m.n_table[slot] = (int)out;
        } else {
          m.fp_table[slot] = facet;
          for (int sp = 0; sp < S; ++sp) {
            long long out = 0;
            int w = sp;
            bool defined = true;
            for (int t = 0; t < depth; ++t) {
              const auto rec = stack[depth - 1 - t];
              const int d = tables.omega(rec[0], rec[1], w, rec[2]);
              if (d < 0) { defined = false; break; }
              out = out * b + d;
              w = tables.child_state[w][d];
            }
            if (defined)
              m.omega_table[((s * S + sp) * m.block + i) * F + f] = (int)out;
          }
        }
      }
    }
  return m;
}

std::string serialize_multilevel(const MultiLevelTables& m) {
  const auto emit_row = [](std::ostringstream& out, const std::vector<int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  };
  std::ostringstream out;
  out << "sfc-block-tables 1\n";
  out << "depth " << m.depth << '\n';
  out << "branching " << m.branching << '\n';
  out << "states " << m.state_count << '\n';
  out << "facet_counts";
  for (int c : m.facet_counts) out << ' ' << c;
  out << '\n';

  out << "block_state\n";
  for (const auto& row : m.block_state) emit_row(out, row);
  if (m.block_parent_state) {
    out << "block_parent_state\n";
    for (const auto& row : *m.block_parent_state) emit_row(out, row);
  } else {
    out << "block_parent_state none\n";
  }

  const int S = m.state_count, F = m.max_facets;
  const auto facets_at = [&](int s, int i) { return m.facet_counts[m.block_state[s][i]]; };
  out << "n\n";
  for (int s = 0; s < S; ++s)
    for (int i = 0; i < m.block; ++i) {
      std::vector<int> row(facets_at(s, i));
      for (int f = 0; f < (int)row.size(); ++f) row[f] = m.n_table[(s * m.block + i) * F + f];
      emit_row(out, row);
    }
  out << "fp\n";
  for (int s = 0; s < S; ++s)
    for (int i = 0; i < m.block; ++i) {
      std::vector<int> row(facets_at(s, i));
      for (int f = 0; f < (int)row.size(); ++f) row[f] = m.fp_table[(s * m.block + i) * F + f];
      emit_row(out, row);
    }
  out << "omega\n";
  for (int s = 0; s < S; ++s)
    for (int sp = 0; sp < S; ++sp)
      for (int i = 0; i < m.block; ++i) {
        std::vector<int> row(facets_at(s, i));
        for (int f = 0; f < (int)row.size(); ++f)
          row[f] = m.omega_table[((s * S + sp) * m.block + i) * F + f];
        emit_row(out, row);
      }
  return out.str();
}

} // namespace sfc
