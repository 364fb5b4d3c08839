/* Invertible affine maps and column-wise equivalence of point matrices. */
#ifndef SFC_AFFINE_HPP
#define SFC_AFFINE_HPP

#include <optional>

#include "sfc/matrix.hpp"

namespace sfc {

struct AffineMap {
  RationalMatrix linear; // d x d, invertible
  RVector offset;        // d

  RVector apply(const RVector& point) const;
  PointMatrix apply_cols(const PointMatrix& points) const;
  bool is_identity() const;
};

// Searches for an invertible affine map tau with tau(q1) = q2 and
// tau(r1) = r2 column by column (same column order on both sides). Passing
// empty r matrices asks for single-matrix equivalence. Returns the witness
// map, or std::nullopt when no such map exists.
//
// The candidate is pinned down on a greedy affine basis of the source columns
// and extended to all of R^d when the columns are not full-dimensional; the
// result is verified column by column before it is returned.
std::optional<AffineMap> matrix_pair_equivalence(const PointMatrix& q1, const PointMatrix& r1,
                                                 const PointMatrix& q2, const PointMatrix& r2);

std::optional<AffineMap> matrix_equivalence(const PointMatrix& q1, const PointMatrix& q2);

} // namespace sfc

#endif
