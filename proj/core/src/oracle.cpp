#include "sfc/oracle.hpp"

#include <stdexcept>
#include <string>

#include "sfc/intersect.hpp"
#include "sfc/matrix.hpp"

namespace sfc {

GeometricOracle::GeometricOracle(BSpecification spec, FacetSpec facets)
    : spec_(std::move(spec)), facets_(std::move(facets)) {}

const std::vector<GeometricOracle::Cell>& GeometricOracle::level_cells(int level) {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  auto it = cache_.find(level);
  if (it != cache_.end()) return it->second;

  std::vector<Cell> cells;
  auto expand = [&](auto&& self, int at, int state, const PointMatrix& points) -> void {
    if (at == level) {
      Cell cell;
      cell.state = state;
      cell.points = points;
      cell.hull = convex_hull(points);
      if (cell.hull.affine_dim != spec_.dimension)
        throw std::logic_error("oracle cell is not full-dimensional");
      cell.box = bounding_box(points);
      const auto& sets = facets_.index_sets[state];
      cell.facet_sets.resize(sets.size());
      for (size_t f = 0; f < sets.size(); ++f)
        cell.facet_sets[f] = facet_point_set(points, sets[f]);
      cells.push_back(std::move(cell));
      return;
    }
    for (int j = 0; j < spec_.branching; ++j)
      self(self, at + 1, spec_.states.child(state, j), points.mul(spec_.matrix(state, j)));
  };
  expand(expand, 0, spec_.states.root_state, spec_.root_points);
  return cache_.emplace(level, std::move(cells)).first->second;
}

std::optional<BigInt> GeometricOracle::neighbor(int level, const BigInt& position, int facet) {
  const auto& cells = level_cells(level);
  if (position < 0 || position >= (BigInt)cells.size())
    throw std::invalid_argument("position out of range for level");
  const size_t at = position.convert_to<size_t>();
  const Cell& cell = cells[at];
  if (facet < 0 || facet >= (int)cell.facet_sets.size())
    throw std::invalid_argument("facet out of range for state " + std::to_string(cell.state));
  const auto& target = cell.facet_sets[facet];

  std::optional<BigInt> found;
  for (size_t other = 0; other < cells.size(); ++other) {
    if (other == at) continue;
    const Cell& candidate = cells[other];
    if (!boxes_touch(cell.box, candidate.box)) continue;
    bool matches = false;
    for (const auto& set : candidate.facet_sets)
      if (set == target) { matches = true; break; }
    if (!matches) continue;
    if (intersection_dimension(cell.hull, candidate.hull) != spec_.dimension - 1) continue;
    if (found)
      throw std::logic_error("oracle found two facet neighbors for one cell; "
                             "the geometry is inconsistent");
    found = BigInt(other);
  }
  return found;
}

std::optional<BigInt> geometric_neighbor_oracle(const BSpecification& spec,
                                                const FacetSpec& facets, int level,
                                                const BigInt& position, int facet) {
  GeometricOracle oracle(spec, facets);
  return oracle.neighbor(level, position, facet);
}

} // namespace sfc
