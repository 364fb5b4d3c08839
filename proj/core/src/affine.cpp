#include "sfc/affine.hpp"

#include <stdexcept>
#include <utility>

namespace sfc {

namespace {

std::optional<RationalMatrix> invert(RationalMatrix m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    if (pivot != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    const Rational scale = Rational(1) / m.at(c, c);
    for (int j = 0; j < n; ++j) {
      m.at(c, j) *= scale;
      inv.at(c, j) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c) == 0) continue;
      const Rational factor = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= factor * m.at(c, j);
        inv.at(r, j) -= factor * inv.at(c, j);
      }
    }
  }
  return inv;
}

PointMatrix concat_cols(const PointMatrix& a, const PointMatrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  PointMatrix out(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

// Completes `points` (already affinely independent) to an affine basis of R^d
// by appending points[0] + e_m for greedily chosen unit directions.
void complete_affine_basis(std::vector<RVector>& points, int d) {
  for (int m = 0; m < d && (int)points.size() < d + 1; ++m) {
    RVector candidate = points[0];
    candidate[m] += 1;
    points.push_back(candidate);
    if (affine_dimension(points) + 1 != (int)points.size()) points.pop_back();
  }
}

} // namespace

RVector AffineMap::apply(const RVector& point) const {
  RVector out = linear.mul_vec(point);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += offset[i];
  return out;
}

PointMatrix AffineMap::apply_cols(const PointMatrix& points) const {
  PointMatrix out(points.rows(), points.cols());
  for (int c = 0; c < points.cols(); ++c) out.set_col(c, apply(points.col(c)));
  return out;
}

bool AffineMap::is_identity() const {
  for (int r = 0; r < linear.rows(); ++r) {
    if (offset[r] != 0) return false;
    for (int c = 0; c < linear.cols(); ++c)
      if (linear.at(r, c) != Rational(r == c ? 1 : 0)) return false;
  }
  return true;
}

std::optional<AffineMap> matrix_pair_equivalence(const PointMatrix& q1, const PointMatrix& r1,
                                                 const PointMatrix& q2, const PointMatrix& r2) {
  if (q1.cols() != q2.cols() || r1.cols() != r2.cols()) return std::nullopt;
  const PointMatrix src = concat_cols(q1, r1);
  const PointMatrix dst = concat_cols(q2, r2);
  if (src.rows() != dst.rows()) return std::nullopt;
  const int d = src.rows();
  if (src.cols() == 0) {
    return AffineMap{RationalMatrix::identity(d), RVector(d, Rational(0))};
  }

  // If a suitable map exists, it sends any affine basis of the source columns
  // to affinely independent images, so one greedy basis choice suffices.
  const std::vector<int> basis = affine_basis_cols(src);
  std::vector<RVector> src_pts, dst_pts;
  for (int idx : basis) {
    src_pts.push_back(src.col(idx));
    dst_pts.push_back(dst.col(idx));
  }
  if (affine_dimension(dst_pts) + 1 != (int)dst_pts.size()) return std::nullopt;

  // Degenerate (lower-dimensional) column spans leave the map underdetermined;
  // extend both sides independently with unit directions and pair them up.
  complete_affine_basis(src_pts, d);
  complete_affine_basis(dst_pts, d);
  if ((int)src_pts.size() != d + 1 || (int)dst_pts.size() != d + 1) return std::nullopt;

  RationalMatrix u(d, d), v(d, d);
  for (int i = 0; i < d; ++i) {
    u.set_col(i, vec_sub(src_pts[i + 1], src_pts[0]));
    v.set_col(i, vec_sub(dst_pts[i + 1], dst_pts[0]));
  }
  const auto u_inv = invert(std::move(u));
  if (!u_inv) return std::nullopt;
  AffineMap tau;
  tau.linear = v.mul(*u_inv);
  if (determinant(tau.linear) == 0) return std::nullopt;
  tau.offset = vec_sub(dst_pts[0], tau.linear.mul_vec(src_pts[0]));

  for (int c = 0; c < src.cols(); ++c)
    if (tau.apply(src.col(c)) != dst.col(c)) return std::nullopt;
  return tau;
}

std::optional<AffineMap> matrix_equivalence(const PointMatrix& q1, const PointMatrix& q2) {
  return matrix_pair_equivalence(q1, PointMatrix(), q2, PointMatrix());
}

} // namespace sfc
