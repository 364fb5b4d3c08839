#include "sfc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sfc {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RVector>& rows) {
  if (rows.empty()) return RationalMatrix();
  RationalMatrix m((int)rows.size(), (int)rows[0].size());
  for (int r = 0; r < m.rows(); ++r) {
    if ((int)rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RVector RationalMatrix::col(int c) const {
  RVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void RationalMatrix::set_col(int c, const RVector& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

RationalMatrix RationalMatrix::mul(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Rational& bkj = rhs.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

RVector RationalMatrix::mul_vec(const RVector& v) const {
  if ((int)v.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
  RVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

RVector vec_sub(const RVector& a, const RVector& b) {
  RVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational vec_dot(const RVector& a, const RVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

int matrix_rank(RationalMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Rational inv = Rational(1) / m.at(rank, c);
    for (int j = c; j < cols; ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      const Rational factor = m.at(r, c);
      for (int j = c; j < cols; ++j) m.at(r, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

int affine_dimension(const std::vector<RVector>& points) {
  if (points.empty()) return -1;
  const int d = (int)points[0].size();
  RationalMatrix diffs((int)points.size() - 1, d);
  for (int i = 1; i < (int)points.size(); ++i)
    for (int j = 0; j < d; ++j) diffs.at(i - 1, j) = points[i][j] - points[0][j];
  return matrix_rank(std::move(diffs));
}

int affine_dimension_cols(const PointMatrix& q) {
  std::vector<RVector> pts;
  pts.reserve(q.cols());
  for (int c = 0; c < q.cols(); ++c) pts.push_back(q.col(c));
  return affine_dimension(pts);
}

std::vector<int> affine_basis_cols(const PointMatrix& q) {
  std::vector<int> basis;
  if (q.cols() == 0) return basis;
  basis.push_back(0);
  std::vector<RVector> selected{q.col(0)};
  int dim = 0;
  for (int c = 1; c < q.cols(); ++c) {
    selected.push_back(q.col(c));
    const int nd = affine_dimension(selected);
    if (nd > dim) {
      dim = nd;
      basis.push_back(c);
    } else {
      selected.pop_back();
    }
  }
  return basis;
}

std::optional<RVector> solve_linear(RationalMatrix a, RVector b) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a.at(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = c; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
      std::swap(b[pivot], b[rank]);
    }
    const Rational inv = Rational(1) / a.at(rank, c);
    for (int j = c; j < cols; ++j) a.at(rank, j) *= inv;
    b[rank] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a.at(r, c) == 0) continue;
      const Rational factor = a.at(r, c);
      for (int j = c; j < cols; ++j) a.at(r, j) -= factor * a.at(rank, j);
      b[r] -= factor * b[rank];
    }
    pivot_col_of_row.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  RVector x(cols, Rational(0));
  for (int r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = b[r];
  return x;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    const Rational inv = Rational(1) / m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      const Rational factor = m.at(r, c) * inv;
      for (int j = c; j < n; ++j) m.at(r, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

std::vector<RVector> null_space(RationalMatrix a) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a.at(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    const Rational inv = Rational(1) / a.at(rank, c);
    for (int j = c; j < cols; ++j) a.at(rank, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a.at(r, c) == 0) continue;
      const Rational factor = a.at(r, c);
      for (int j = c; j < cols; ++j) a.at(r, j) -= factor * a.at(rank, j);
    }
    pivot_col_of_row.push_back(c);
    is_pivot[c] = true;
    ++rank;
  }
  std::vector<RVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVector v(cols, Rational(0));
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace sfc
