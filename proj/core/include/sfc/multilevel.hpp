#ifndef SFC_MULTILEVEL_HPP
#define SFC_MULTILEVEL_HPP

/* Neighbor tables covering K levels per step.
 *
 * A block digit is a node's position within its ancestor K levels up, a
 * number below b^K. The tables answer the same three questions as the
 * single-level ones, but per block: sibling block digit, facet of the block
 * ancestor, and block digit inside the adjacent block. They are built by
 * running the single-level resolution across every block configuration, so
 * depth 1 reproduces the single-level tables entry for entry.
 */

#include <optional>
#include <vector>

#include "sfc/tables.hpp"

namespace sfc {

struct MultiLevelTables {
  int depth = 1;       // K
  int branching = 0;   // b
  int block = 0;       // b^K
  int state_count = 0;
  int max_facets = 0;
  std::vector<int> facet_counts;
  std::vector<std::vector<int>> block_state;  // [ancestor state][block digit]
  std::optional<std::vector<std::vector<int>>> block_parent_state;
  std::vector<int> n_table, fp_table, omega_table;

  int n(int digit, int state, int facet) const {
    return n_table[(state * block + digit) * max_facets + facet];
  }
  int fp(int digit, int state, int facet) const {
    return fp_table[(state * block + digit) * max_facets + facet];
  }
  int omega(int digit, int state, int neighbor_state, int facet) const {
    return omega_table[((state * state_count + neighbor_state) * block + digit) * max_facets +
                       facet];
  }
};

// Throws std::invalid_argument when depth < 1 or the tables would exceed
// 2^26 entries.
MultiLevelTables build_multilevel(const CurveTables& tables, int depth);

// Text form mirroring serialize_tables; rows are laid out per block digit.
std::string serialize_multilevel(const MultiLevelTables& m);

} // namespace sfc

#endif
