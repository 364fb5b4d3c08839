#include "sfc/intersect.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sfc {

std::vector<RVector> intersection_vertices(const ConvexHull& a, const ConvexHull& b) {
  if (a.facets.empty() || b.facets.empty())
    throw std::invalid_argument("intersection requires full-dimensional hulls");
  std::vector<const Hyperplane*> planes;
  for (const HullFacet& f : a.facets) planes.push_back(&f.plane);
  for (const HullFacet& f : b.facets) planes.push_back(&f.plane);
  const int d = (int)planes[0]->normal.size();
  const int m = (int)planes.size();

  std::set<RVector> verts;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    RationalMatrix lhs(d, d);
    RVector rhs(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) lhs.at(i, j) = planes[pick[i]]->normal[j];
      rhs[i] = planes[pick[i]]->offset;
    }
    if (determinant(lhs) != 0) {
      const RVector x = *solve_linear(lhs, rhs);
      bool inside = true;
      for (const Hyperplane* p : planes)
        if (p->eval(x) > 0) { inside = false; break; }
      if (inside) verts.insert(x);
    }
    int i = d - 1;
    while (i >= 0 && pick[i] == m - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {verts.begin(), verts.end()};
}

int intersection_dimension(const ConvexHull& a, const ConvexHull& b) {
  return affine_dimension(intersection_vertices(a, b));
}

} // namespace sfc
