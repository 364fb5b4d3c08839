#ifndef SFC_TABLES_HPP
#define SFC_TABLES_HPP

/* The compiled neighbor tables of one curve.
 *
 * Three lookups drive every query, all indexed by a child digit j under a
 * parent of state s and a facet f of the child's own state:
 *
 *   n(j, s, f)          sibling digit whose cell shares that facet, or -1
 *   fp(j, s, f)         parent facet the child facet lies in, or -1
 *   omega(j, s, s', f)  digit of the matching child inside the neighboring
 *                       cell of state s', or -1
 *
 * Exactly one of n and fp is defined for each (j, s, f): a child facet is
 * either interior to the parent or on its boundary. Tables are extracted
 * from the representation witnesses and only exist for specifications that
 * passed every regularity clause.
 */

#include <optional>
#include <string>
#include <vector>

#include "sfc/facet_spec.hpp"
#include "sfc/representation.hpp"

namespace sfc {

struct CurveTables {
  int branching = 0;
  int state_count = 0;
  int root_state = 0;
  int max_facets = 0;  // row stride; rows are padded with -1
  std::vector<int> facet_counts;  // per state
  bool palindrome = false;
  std::vector<std::vector<int>> child_state;
  std::optional<std::vector<std::vector<int>>> parent_state;
  FacetSpec facet_spec;
  std::vector<int> n_table, omega_table, fp_table;

  int n(int digit, int state, int facet) const {
    return n_table[(state * branching + digit) * max_facets + facet];
  }
  int fp(int digit, int state, int facet) const {
    return fp_table[(state * branching + digit) * max_facets + facet];
  }
  int omega(int digit, int state, int neighbor_state, int facet) const {
    return omega_table[((state * state_count + neighbor_state) * branching + digit) * max_facets +
                       facet];
  }
  int child_facet_count(int state, int digit) const {
    return facet_counts[child_state[state][digit]];
  }

  bool operator==(const CurveTables&) const = default;
};

// Every defined omega entry reverses the digit: omega(j, ...) == b-1-j.
bool check_palindrome(const CurveTables& tables);

// Extraction from the witnesses; call only after check_regularity came back
// clean. Inconsistent rewrites and ambiguous matches throw std::logic_error.
CurveTables compute_tables(const BSpecification& spec, const FacetSpec& facets,
                           const Representation& rep);

struct CompiledCurve {
  FacetSpec facets;
  Representation rep;
  RegularityReport report;
  std::optional<CurveTables> tables;  // absent unless report.ok()
};

CompiledCurve compile_curve(const BSpecification& spec);

// Canonical text format, "sfc-tables 1". Identical tables serialize to
// identical bytes.
std::string serialize_tables(const CurveTables& tables);
CurveTables parse_tables(const std::string& text);

} // namespace sfc

#endif
