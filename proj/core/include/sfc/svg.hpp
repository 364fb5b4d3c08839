#ifndef SFC_SVG_HPP
#define SFC_SVG_HPP

/* SVG rendering of plane curves.
 *
 * Draws the cell decomposition at one level and the traversal polyline
 * through the exact cell centroids, optionally one level deeper. All
 * geometry, including the fit onto the page, is computed in rationals and
 * only rounded when coordinates are printed (nine significant digits), so
 * output bytes are reproducible.
 */

#include <string>

#include "sfc/curve_spec.hpp"

namespace sfc {

enum class CellLabels { none, positions, states };

struct RenderOptions {
  int level = 3;
  int curve_offset = 0;  // polyline level = level + curve_offset; 0 or 1
  CellLabels labels = CellLabels::none;
  bool digit_labels = false;  // print positions as base-b digit strings
  int size = 800;             // page edge in pixels
};

// Plane curves only; cell counts above 100000 are refused.
std::string render_svg(const BSpecification& spec, const RenderOptions& options);

} // namespace sfc

#endif
