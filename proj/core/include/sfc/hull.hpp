#ifndef SFC_HULL_HPP
#define SFC_HULL_HPP

/* Exact convex hulls over rational coordinates.
 *
 * Facets are enumerated by gift wrapping: an initial supporting hyperplane is
 * rotated until it touches a full facet, then the facet graph is traversed by
 * pivoting across ridges. Non-simplicial facets come out merged, each listing
 * every input column that lies on its hyperplane. hull_facets_bruteforce
 * enumerates supporting hyperplanes through column subsets instead; it is
 * meant as an independent cross-check for small inputs.
 */

#include <vector>

#include "sfc/matrix.hpp"

namespace sfc {

struct Hyperplane {
  RVector normal;   // outward: normal . x <= offset holds on the polytope
  Rational offset;

  Rational eval(const RVector& point) const;  // normal . point - offset
};

struct HullFacet {
  std::vector<int> vertex_cols;  // 1-based input columns on the facet, sorted
  Hyperplane plane;
};

struct ConvexHull {
  int affine_dim = -1;           // -1 for an empty point set
  std::vector<int> vertex_cols;  // 1-based extreme-point columns, sorted
  std::vector<HullFacet> facets; // empty unless the points span the ambient space
};

// Points are the columns of the matrix. Facets (and vertex_cols) are filled
// only when the points affinely span the ambient space; facets are sorted by
// vertex column set and their normals are scaled to coprime integers.
ConvexHull convex_hull(const PointMatrix& points);

std::vector<HullFacet> hull_facets_bruteforce(const PointMatrix& points);

// Componentwise bounding box, a cheap filter before exact intersection work.
struct Box {
  RVector lo, hi;
};

Box bounding_box(const PointMatrix& points);
bool boxes_touch(const Box& a, const Box& b);

} // namespace sfc

#endif
