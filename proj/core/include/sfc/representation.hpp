#ifndef SFC_REPRESENTATION_HPP
#define SFC_REPRESENTATION_HPP

/* Finite witnesses that stand for the whole infinite tree.
 *
 * The pre-representation picks, for every state, the first tree node of that
 * state in (level, position) order. The representation adds, for every way
 * two states can meet across a facet, one concrete pair of adjacent nodes.
 * Regularity of the specification is what makes these finitely many
 * witnesses conclusive, and is itself checked here:
 *
 *   P1'  children of a witness are affinely equivalent to the witness of
 *        their state, column for column
 *   P2'  every witness spans the full dimension
 *   R1'  any two pairs realizing the same adjacency triple are equivalent
 *        under a single affine map
 *   R2'  children stay inside their parent
 *   R3'  two cells of a level meet in a common face or not at all
 *
 * Checks are exact; violations carry a printable witness.
 */

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sfc/curve_spec.hpp"
#include "sfc/facet_spec.hpp"
#include "sfc/matrix.hpp"

namespace sfc {

struct WitnessNode {
  std::vector<int> digits;  // path from the root, coarsest first
  int state = 0;
  PointMatrix points;

  int level() const { return (int)digits.size(); }
  std::string describe(int branching) const;
};

// Adjacent same-level nodes: facet `facet_v` of v equals facet `facet_w` of w.
struct RepPair {
  WitnessNode v, w;
  int facet_v = -1, facet_w = -1;
};

// Key (state of v, state of w, facet of v); both orientations are stored.
using AdjacencyTriple = std::array<int, 3>;

struct Representation {
  std::vector<WitnessNode> pre;  // indexed by state
  std::map<AdjacencyTriple, RepPair> pairs;
};

struct RegularityViolation {
  std::string clause;  // "P1'", "P2'", "R1'", "R2'", "R3'"
  std::string witness;
};

struct RegularityReport {
  std::vector<RegularityViolation> violations;
  bool ok() const { return violations.empty(); }
  bool clause_ok(const std::string& clause) const;
};

std::vector<WitnessNode> find_pre_representation(const BSpecification& spec);

// P1' and P2'. The remaining clauses need facets and pairs.
void check_pre_regularity(const BSpecification& spec, const std::vector<WitnessNode>& pre,
                          RegularityReport& report);

FacetSpec enumerate_facets(const BSpecification& spec, const std::vector<WitnessNode>& pre);

// Fixpoint sweep: sibling adjacencies under each witness, then child
// adjacencies across every discovered pair, until no new triple appears.
// Rediscovering a triple checks R1' against the stored pair on the spot.
Representation find_representation(const BSpecification& spec, const FacetSpec& facets,
                                   std::vector<WitnessNode> pre, RegularityReport& report);

// R2' and R3' on the representation's witnesses.
void check_regularity(const BSpecification& spec, const FacetSpec& facets,
                      const Representation& rep, RegularityReport& report);

} // namespace sfc

#endif
