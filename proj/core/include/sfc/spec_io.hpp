#ifndef SFC_SPEC_IO_HPP
#define SFC_SPEC_IO_HPP

/* JSON exchange format for curve specifications.
 *
 * Rationals are strings, "2/3" or "1"; root_points is dimension rows of
 * vertex_counts[root] entries; matrices are keyed "state,digit". The optional
 * cube block records a k^d construction so facet numbering survives a round
 * trip. Parsing validates the result and reports problems as
 * std::invalid_argument.
 */

#include <string>

#include "sfc/curve_spec.hpp"

namespace sfc {

std::string spec_to_json(const BSpecification& spec);
BSpecification spec_from_json(const std::string& text);

} // namespace sfc

#endif
