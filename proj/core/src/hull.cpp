#include "sfc/hull.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace sfc {

namespace {

using MPZ = boost::multiprecision::mpz_int;

void canonicalize(Hyperplane& h) {
  using boost::multiprecision::abs;
  using boost::multiprecision::denominator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;

  std::vector<Rational> entries = h.normal;
  entries.push_back(h.offset);
  MPZ common_den = 1;
  for (const Rational& e : entries) common_den = lcm(common_den, denominator(e));
  const Rational blow(common_den);
  MPZ g = 0;
  for (Rational& e : entries) {
    e *= blow;
    g = gcd(g, MPZ(abs(numerator(e))));
  }
  if (g == 0) throw std::logic_error("degenerate hyperplane");
  const Rational shrink = Rational(1) / Rational(g);
  for (Rational& e : entries) e *= shrink;
  h.offset = entries.back();
  entries.pop_back();
  h.normal = std::move(entries);
}

std::vector<int> on_plane_cols(const PointMatrix& pts, const Hyperplane& h) {
  std::vector<int> cols;
  for (int c = 0; c < pts.cols(); ++c)
    if (h.eval(pts.col(c)) == 0) cols.push_back(c + 1);
  return cols;
}

// Supporting hyperplane through the d-subset of columns, if the subset spans a
// hyperplane and every point lies on one side of it. Oriented outward.
std::optional<Hyperplane> supporting_plane_through(const PointMatrix& pts,
                                                   const std::vector<int>& cols0) {
  const RVector base = pts.col(cols0[0]);
  RationalMatrix dirs((int)cols0.size() - 1, pts.rows());
  for (std::size_t i = 1; i < cols0.size(); ++i) {
    const RVector diff = vec_sub(pts.col(cols0[i]), base);
    for (int j = 0; j < pts.rows(); ++j) dirs.at((int)i - 1, j) = diff[j];
  }
  auto kernel = null_space(dirs);
  if (kernel.size() != 1) return std::nullopt;
  Hyperplane h{kernel[0], vec_dot(kernel[0], base)};
  bool above = false, below = false;
  for (int c = 0; c < pts.cols(); ++c) {
    const Rational side = h.eval(pts.col(c));
    if (side > 0) above = true;
    else if (side < 0) below = true;
    if (above && below) return std::nullopt;
  }
  if (!above && !below) return std::nullopt;
  if (above) {
    for (Rational& e : h.normal) e = -e;
    h.offset = -h.offset;
  }
  canonicalize(h);
  return h;
}

// Rotates the supporting hyperplane `h` about the (d-2)-flat through x0 with
// direction span `flat_dirs` until it hits the point set again. Points
// touching h must either lie in that flat or, when `witness` is given (a
// point of the old facet off the flat), on the witness side of it; the
// rotation then moves away from them. Without a witness both directions are
// acceptable and one is picked arbitrarily.
Hyperplane pivot_about_flat(const PointMatrix& pts, const RVector& x0,
                            const std::vector<RVector>& flat_dirs, const Hyperplane& h,
                            const RVector* witness) {
  const int d = pts.rows();
  RationalMatrix dm((int)flat_dirs.size(), d);
  for (std::size_t i = 0; i < flat_dirs.size(); ++i)
    for (int j = 0; j < d; ++j) dm.at((int)i, j) = flat_dirs[i][j];
  auto kernel = null_space(dm);
  if (kernel.size() != 2) throw std::logic_error("pivot flat is not (d-2)-dimensional");

  RVector g = kernel[0];
  if (matrix_rank(RationalMatrix::from_rows({h.normal, g})) < 2) g = kernel[1];
  if (witness) {
    const Rational side = vec_dot(g, vec_sub(*witness, x0));
    if (side == 0) throw std::logic_error("pivot witness lies in the rotation flat");
    if (side > 0)
      for (Rational& e : g) e = -e;
  }

  // The rotated normal is alpha * h + g; each point strictly below h bounds
  // alpha from below and the largest bound is attained by the first point hit.
  bool found = false;
  Rational alpha;
  for (int c = 0; c < pts.cols(); ++c) {
    const Rational a = h.eval(pts.col(c));
    if (a == 0) continue;
    const Rational bound = vec_dot(g, vec_sub(pts.col(c), x0)) / -a;
    if (!found || bound > alpha) {
      alpha = bound;
      found = true;
    }
  }
  if (!found) throw std::logic_error("pivot found no points off the hyperplane");

  Hyperplane next;
  next.normal.resize(d);
  for (int j = 0; j < d; ++j) next.normal[j] = alpha * h.normal[j] + g[j];
  next.offset = vec_dot(next.normal, x0);
  canonicalize(next);
  return next;
}

Hyperplane first_facet_plane(const PointMatrix& pts) {
  const int d = pts.rows();
  Rational min_x = pts.at(0, 0);
  for (int c = 1; c < pts.cols(); ++c) min_x = std::min(min_x, pts.at(0, c));
  Hyperplane h;
  h.normal.assign(d, Rational(0));
  h.normal[0] = -1;
  h.offset = -min_x;

  for (;;) {
    const std::vector<int> touch = on_plane_cols(pts, h);
    PointMatrix tp(d, (int)touch.size());
    for (std::size_t i = 0; i < touch.size(); ++i) tp.set_col((int)i, pts.col(touch[i] - 1));
    const std::vector<int> basis = affine_basis_cols(tp);
    if ((int)basis.size() == d) break;

    const RVector x0 = tp.col(basis[0]);
    std::vector<RVector> dirs;
    for (std::size_t i = 1; i < basis.size(); ++i) dirs.push_back(vec_sub(tp.col(basis[i]), x0));
    RationalMatrix hn(1, d);
    for (int j = 0; j < d; ++j) hn.at(0, j) = h.normal[j];
    for (const RVector& cand : null_space(hn)) {
      if ((int)dirs.size() == d - 2) break;
      dirs.push_back(cand);
      if (matrix_rank(RationalMatrix::from_rows(dirs)) < (int)dirs.size()) dirs.pop_back();
    }
    if ((int)dirs.size() != d - 2) throw std::logic_error("could not frame the pivot flat");
    h = pivot_about_flat(pts, x0, dirs, h, nullptr);
  }
  return h;
}

// Ridges of a facet, as global 1-based column sets: the facet's points are
// rewritten in affine coordinates of its hyperplane and hulled one dimension
// down. Requires ambient dimension >= 2.
std::vector<std::vector<int>> facet_ridges(const PointMatrix& pts,
                                           const std::vector<int>& facet_cols) {
  const int d = pts.rows();
  const int m = (int)facet_cols.size();
  PointMatrix fp(d, m);
  for (int i = 0; i < m; ++i) fp.set_col(i, pts.col(facet_cols[i] - 1));
  const std::vector<int> basis = affine_basis_cols(fp);
  if ((int)basis.size() != d) throw std::logic_error("facet does not span a hyperplane");

  const RVector base = fp.col(basis[0]);
  RationalMatrix frame(d, d - 1);
  for (int i = 1; i < d; ++i) frame.set_col(i - 1, vec_sub(fp.col(basis[i]), base));
  PointMatrix local(d - 1, m);
  for (int i = 0; i < m; ++i) {
    auto coords = solve_linear(frame, vec_sub(fp.col(i), base));
    if (!coords) throw std::logic_error("facet point outside its own hyperplane");
    local.set_col(i, *coords);
  }

  std::vector<std::vector<int>> ridges;
  for (const HullFacet& sub : convex_hull(local).facets) {
    std::vector<int> global;
    for (int idx : sub.vertex_cols) global.push_back(facet_cols[idx - 1]);
    std::sort(global.begin(), global.end());
    ridges.push_back(std::move(global));
  }
  return ridges;
}

std::vector<int> extreme_cols(const PointMatrix& pts, const std::vector<HullFacet>& facets) {
  std::vector<int> verts;
  for (int c = 0; c < pts.cols(); ++c) {
    std::vector<RVector> active;
    for (const HullFacet& f : facets)
      if (f.plane.eval(pts.col(c)) == 0) active.push_back(f.plane.normal);
    if (!active.empty() && matrix_rank(RationalMatrix::from_rows(active)) == pts.rows())
      verts.push_back(c + 1);
  }
  return verts;
}

} // namespace

Rational Hyperplane::eval(const RVector& point) const {
  return vec_dot(normal, point) - offset;
}

ConvexHull convex_hull(const PointMatrix& points) {
  ConvexHull out;
  out.affine_dim = affine_dimension_cols(points);
  const int d = points.rows();
  if (points.cols() == 0 || out.affine_dim != d) return out;

  if (d == 1) {
    Rational lo = points.at(0, 0), hi = points.at(0, 0);
    for (int c = 1; c < points.cols(); ++c) {
      lo = std::min(lo, points.at(0, c));
      hi = std::max(hi, points.at(0, c));
    }
    Hyperplane lower{{Rational(-1)}, -lo}, upper{{Rational(1)}, hi};
    out.facets.push_back({on_plane_cols(points, lower), lower});
    out.facets.push_back({on_plane_cols(points, upper), upper});
  } else {
    std::map<std::vector<int>, Hyperplane> known;
    std::deque<std::vector<int>> work;
    const Hyperplane first = first_facet_plane(points);
    const std::vector<int> first_cols = on_plane_cols(points, first);
    known.emplace(first_cols, first);
    work.push_back(first_cols);

    while (!work.empty()) {
      const std::vector<int> facet_cols = work.front();
      work.pop_front();
      const Hyperplane plane = known.at(facet_cols);
      for (const std::vector<int>& ridge : facet_ridges(points, facet_cols)) {
        const std::set<int> in_ridge(ridge.begin(), ridge.end());
        const RVector x0 = points.col(ridge[0] - 1);

        PointMatrix rp(d, (int)ridge.size());
        for (std::size_t i = 0; i < ridge.size(); ++i)
          rp.set_col((int)i, points.col(ridge[i] - 1));
        const std::vector<int> rbasis = affine_basis_cols(rp);
        std::vector<RVector> dirs;
        for (std::size_t i = 1; i < rbasis.size(); ++i)
          dirs.push_back(vec_sub(rp.col(rbasis[i]), rp.col(rbasis[0])));
        if ((int)dirs.size() != d - 2) throw std::logic_error("ridge has the wrong dimension");

        const int witness_col = *std::find_if(facet_cols.begin(), facet_cols.end(),
                                              [&](int c) { return !in_ridge.count(c); });
        const RVector witness = points.col(witness_col - 1);
        const Hyperplane next =
            pivot_about_flat(points, rp.col(rbasis[0]), dirs, plane, &witness);
        std::vector<int> next_cols = on_plane_cols(points, next);
        if (known.emplace(next_cols, next).second) work.push_back(std::move(next_cols));
      }
    }
    for (auto& [cols, plane] : known) out.facets.push_back({cols, plane});
  }

  out.vertex_cols = extreme_cols(points, out.facets);
  return out;
}

std::vector<HullFacet> hull_facets_bruteforce(const PointMatrix& points) {
  const int d = points.rows();
  const int n = points.cols();
  if (affine_dimension_cols(points) != d)
    throw std::invalid_argument("hull_facets_bruteforce requires full-dimensional points");
  std::map<std::vector<int>, Hyperplane> found;
  if (d == 1) {
    for (const HullFacet& f : convex_hull(points).facets) found.emplace(f.vertex_cols, f.plane);
  } else {
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      if (auto plane = supporting_plane_through(points, pick))
        found.emplace(on_plane_cols(points, *plane), *plane);
      int i = d - 1;
      while (i >= 0 && pick[i] == n - d + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::vector<HullFacet> facets;
  for (auto& [cols, plane] : found) facets.push_back({cols, plane});
  return facets;
}

} // namespace sfc

namespace sfc {

Box bounding_box(const PointMatrix& points) {
  Box box;
  box.lo = box.hi = points.col(0);
  for (int c = 1; c < points.cols(); ++c)
    for (int r = 0; r < points.rows(); ++r) {
      const Rational& x = points.at(r, c);
      if (x < box.lo[r]) box.lo[r] = x;
      if (x > box.hi[r]) box.hi[r] = x;
    }
  return box;
}

bool boxes_touch(const Box& a, const Box& b) {
  for (size_t r = 0; r < a.lo.size(); ++r)
    if (a.hi[r] < b.lo[r] || b.hi[r] < a.lo[r]) return false;
  return true;
}

} // namespace sfc
