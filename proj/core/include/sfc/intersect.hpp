#ifndef SFC_INTERSECT_HPP
#define SFC_INTERSECT_HPP

/* Exact intersections of full-dimensional hull polytopes.
 *
 * The intersection of two bounded polytopes is again a bounded polytope, so
 * it equals the convex hull of its vertices, and every vertex solves some
 * d-subset of the combined facet inequalities with equality. Enumerating
 * those subsets gives the vertex set exactly.
 */

#include <vector>

#include "sfc/hull.hpp"

namespace sfc {

// Vertices of hull(a) intersected with hull(b), deduplicated and sorted.
// Both hulls must carry facets (i.e. be full-dimensional).
std::vector<RVector> intersection_vertices(const ConvexHull& a, const ConvexHull& b);

// Affine dimension of the intersection; -1 when it is empty.
int intersection_dimension(const ConvexHull& a, const ConvexHull& b);

} // namespace sfc

#endif
