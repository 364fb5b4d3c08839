/* Dense rational matrices and exact linear-algebra helpers.
 *
 * Points are matrix columns everywhere in this library: a point matrix is a
 * d x n rational matrix whose n columns are points of R^d.
 */
#ifndef SFC_MATRIX_HPP
#define SFC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "sfc/rational.hpp"

namespace sfc {

using RVector = std::vector<Rational>;

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);
  // Builds a matrix from rows given as nested initializer data.
  static RationalMatrix from_rows(const std::vector<RVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  RVector col(int c) const;
  void set_col(int c, const RVector& v);

  RationalMatrix mul(const RationalMatrix& rhs) const;
  RVector mul_vec(const RVector& v) const;

  bool operator==(const RationalMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
  bool operator!=(const RationalMatrix& rhs) const { return !(*this == rhs); }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Point matrices are plain rational matrices with a points-as-columns reading.
using PointMatrix = RationalMatrix;

RVector vec_sub(const RVector& a, const RVector& b);
Rational vec_dot(const RVector& a, const RVector& b);

// Exact rank via fraction-aware Gaussian elimination. Destroys nothing.
int matrix_rank(RationalMatrix m);

// Dimension of the affine hull of the given points; -1 for an empty set.
int affine_dimension(const std::vector<RVector>& points);
int affine_dimension_cols(const PointMatrix& q);

// Greedy affinely independent subset: indices i0 < i1 < ... such that the
// selected points span the affine hull of all points. Size = dimension + 1.
std::vector<int> affine_basis_cols(const PointMatrix& q);

// Solves A x = b exactly. Returns one solution if the system is consistent
// (free variables are set to zero), std::nullopt otherwise.
std::optional<RVector> solve_linear(RationalMatrix a, RVector b);

// Determinant of a square matrix.
Rational determinant(RationalMatrix m);

// Kernel of the homogeneous system A x = 0: a basis of the null space.
std::vector<RVector> null_space(RationalMatrix a);

} // namespace sfc

#endif
