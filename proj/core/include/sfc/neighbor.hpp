#ifndef SFC_NEIGHBOR_HPP
#define SFC_NEIGHBOR_HPP

/* Facet neighbor queries on compiled tables.
 *
 * A query ascends while the neighbor lies outside the current subtree,
 * translating the facet through fp at each step, then descends into the
 * adjacent subtree through omega. The expected number of steps is constant
 * for the curves in the catalog; the worst case is the node's level.
 *
 * The recursive form mirrors the defining recurrence on history nodes. The
 * iterative form runs ascent and descent as two flat loops over a reusable
 * per-thread scratch buffer (its preallocated size comes from the
 * SFC_SCRATCH_LEVELS environment variable, default 64, growing on demand).
 * The block form consumes several levels per step using multi-level tables.
 */

#include <functional>
#include <optional>
#include <vector>

#include "sfc/multilevel.hpp"
#include "sfc/nodes.hpp"
#include "sfc/tables.hpp"

namespace sfc {

std::optional<HistoryNode> neighbor(const CurveTables& tables, const HistoryNode& node,
                                    int facet);
std::optional<AlgebraicNode> neighbor(const CurveTables& tables, const AlgebraicNode& node,
                                      int facet);

std::optional<AlgebraicNode> neighbor_iterative(const CurveTables& tables,
                                                const AlgebraicNode& node, int facet);

// Blocks are aligned at the leaf; the level % depth levels under the root
// fall back to single-level steps.
std::optional<AlgebraicNode> neighbor_multilevel(const MultiLevelTables& blocks,
                                                 const CurveTables& tables,
                                                 const AlgebraicNode& node, int facet);

// Number of tree levels a query touches: 1 for a sibling answer, up to
// level+1 when the ascent runs out at the root.
int neighbor_depth(const CurveTables& tables, const AlgebraicNode& node, int facet);

struct DepthStats {
  // depth_at_least[k] counts node-facet pairs of the level with query depth
  // >= k; entry 0 holds the total number of pairs.
  std::vector<long long> depth_at_least;
  // Pairs with no neighbor at all, split by facet id.
  std::vector<long long> no_neighbor;
};

DepthStats depth_histogram(const CurveTables& tables, int level);

// Neighbors of a node whose state is taken to be `assumed_state`, with the
// ancestor states reconstructed through the inverse transitions. One entry
// per facet of the assumed state.
std::vector<std::optional<AlgebraicNode>> neighbor_with_wrong_state(const CurveTables& tables,
                                                                    int level,
                                                                    const BigInt& position,
                                                                    int assumed_state);

// Depth-first sweep over all nodes down to max_level. The visitor sees each
// node with its neighbors on every facet, each derived in constant time from
// the parent's neighbors.
using TraversalVisitor =
    std::function<void(const AlgebraicNode&, const std::vector<std::optional<AlgebraicNode>>&)>;

void traverse(const CurveTables& tables, int max_level, const TraversalVisitor& visit);

} // namespace sfc

#endif
