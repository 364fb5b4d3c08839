#ifndef SFC_CATALOG_HPP
#define SFC_CATALOG_HPP

/* Built-in curve constructions.
 *
 * Every entry carries a ready b-specification; cube curves additionally keep
 * their k^d construction so coordinate conversions can walk the child orders
 * directly. Names follow the pattern <family><dimension>[_global|_local];
 * bare names (hilbert2d, peano2, sierpinski2d, ...) alias a default variant.
 */

#include <optional>
#include <string>
#include <vector>

#include "sfc/curve_spec.hpp"
#include "sfc/kd_spec.hpp"

namespace sfc {

struct CatalogEntry {
  std::string name;  // canonical name, aliases resolved
  BSpecification spec;
  std::optional<KDSpecification> kd;  // present for cube constructions
};

// Canonical names, the order used by exhaustive sweeps.
const std::vector<std::string>& catalog_names();

// Throws std::invalid_argument for unknown names. morton<d> accepts any
// dimension up to 6 and peano<d> up to 4; the name list only advertises the
// common instances.
CatalogEntry catalog_curve(const std::string& name);

} // namespace sfc

#endif
