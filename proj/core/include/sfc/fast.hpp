#ifndef SFC_FAST_HPP
#define SFC_FAST_HPP

/* Closed-form and table-specialised neighbor kernels.
 *
 * Each kernel answers the same queries as the general engine on one fixed
 * catalog curve and uses that curve's facet numbering. The engine remains the
 * reference; the kernels trade generality for machine-word arithmetic.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "sfc/rational.hpp"

namespace sfc {

// One dilated add or subtract per query. Facets come in axis pairs, low side
// before high side; level * dimension must stay within 63 bits.
std::optional<std::uint64_t> morton_neighbor(int dimension, int level, std::uint64_t position,
                                             int facet);

// State of a plane Hilbert cell from two popcounts over the digit string.
int hilbert2d_state_fast(int level, std::uint64_t position);

std::optional<std::uint64_t> hilbert2d_neighbor_fast(int level, std::uint64_t position, int facet);

// Triangle halving: the sibling check and the facet relabelling are small
// enough to inline, and the palindrome descent is one xor.
std::optional<std::uint64_t> sierpinski2d_neighbor_fast(int level, std::uint64_t position,
                                                        int facet);

// Reads its single-state transition rows off the compiled peano<d>_local
// tables once; afterwards a query is digit arithmetic in base 3^d. Positions
// outgrow 64 bits quickly in base 9, hence the big-integer overload. Facet
// ids are the collapsed curve's own: ordered lexicographically by corner
// sets and read in each cell's frame, which the per-cell reflections of the
// construction rotate against the fixed axes. Queries therefore agree with
// the peano<d>_local engine, not with the axis-labeled global variant.
class PeanoKernel {
 public:
  explicit PeanoKernel(int dimension);

  int dimension() const { return dimension_; }
  int facet_count() const { return facet_count_; }
  std::optional<std::uint64_t> neighbor(int level, std::uint64_t position, int facet) const;
  std::optional<BigInt> neighbor(int level, const BigInt& position, int facet) const;

 private:
  template <class Int>
  std::optional<Int> query(int level, const Int& position, int facet) const;

  int dimension_ = 0;
  int branching_ = 0;
  int facet_count_ = 0;
  std::vector<int> sibling_, parent_facet_;  // [digit * facet_count + facet]
};

} // namespace sfc

#endif
