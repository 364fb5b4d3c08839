#ifndef SFC_ORACLE_HPP
#define SFC_ORACLE_HPP

/* Ground truth for neighbor queries, computed from geometry alone.
 *
 * The oracle expands every cell of a level, then decides adjacency by the
 * definition: w is the facet-f neighbor of v when the cells intersect in
 * exactly that facet. For full-dimensional cells this is equivalent to the
 * facet point sets matching and the intersection having dimension d-1, which
 * is what gets tested, exactly, over the rationals. No lookup table is
 * consulted anywhere, so agreement with the engine is meaningful evidence.
 */

#include <map>
#include <optional>
#include <vector>

#include "sfc/curve_spec.hpp"
#include "sfc/facet_spec.hpp"
#include "sfc/hull.hpp"
#include "sfc/rational.hpp"

namespace sfc {

class GeometricOracle {
 public:
  GeometricOracle(BSpecification spec, FacetSpec facets);

  // Position of the facet-f neighbor at the same level, if any. Finding two
  // candidates means the geometry is inconsistent and throws std::logic_error.
  std::optional<BigInt> neighbor(int level, const BigInt& position, int facet);

 private:
  struct Cell {
    int state;
    PointMatrix points;
    ConvexHull hull;
    Box box;
    std::vector<std::vector<RVector>> facet_sets;
  };

  const std::vector<Cell>& level_cells(int level);

  BSpecification spec_;
  FacetSpec facets_;
  std::map<int, std::vector<Cell>> cache_;
};

// One-shot convenience around the class.
std::optional<BigInt> geometric_neighbor_oracle(const BSpecification& spec,
                                                const FacetSpec& facets, int level,
                                                const BigInt& position, int facet);

} // namespace sfc

#endif
