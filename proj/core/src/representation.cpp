#include "sfc/representation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "sfc/affine.hpp"
#include "sfc/hull.hpp"
#include "sfc/intersect.hpp"
#include "sfc/nodes.hpp"

namespace sfc {

std::string WitnessNode::describe(int branching) const {
  const BigInt position = digits_position(digits, branching);
  return "level " + std::to_string(level()) + " position " + position.str() +
         " state " + std::to_string(state);
}

bool RegularityReport::clause_ok(const std::string& clause) const {
  for (const auto& v : violations)
    if (v.clause == clause) return false;
  return true;
}

namespace {

WitnessNode child_witness(const BSpecification& spec, const WitnessNode& parent, int digit) {
  WitnessNode child;
  child.digits = parent.digits;
  child.digits.push_back(digit);
  child.state = spec.states.child(parent.state, digit);
  child.points = parent.points.mul(spec.matrix(parent.state, digit));
  return child;
}

std::vector<WitnessNode> children_of(const BSpecification& spec, const WitnessNode& parent) {
  std::vector<WitnessNode> children;
  children.reserve(spec.branching);
  for (int j = 0; j < spec.branching; ++j)
    children.push_back(child_witness(spec, parent, j));
  return children;
}

// Per-facet point sets of one node, ready for exact comparison.
std::vector<std::vector<RVector>> node_facet_sets(const FacetSpec& facets,
                                                  const WitnessNode& node) {
  const auto& sets = facets.index_sets[node.state];
  std::vector<std::vector<RVector>> out(sets.size());
  for (size_t f = 0; f < sets.size(); ++f)
    out[f] = facet_point_set(node.points, sets[f]);
  return out;
}

} // namespace

std::vector<WitnessNode> find_pre_representation(const BSpecification& spec) {
  const int count = spec.states.state_count;
  std::vector<WitnessNode> pre(count);
  std::vector<bool> seen(count, false);

  WitnessNode root;
  root.state = spec.states.root_state;
  root.points = spec.root_points;
  pre[root.state] = root;
  seen[root.state] = true;
  int missing = count - 1;

  // First nodes of each state appear under earlier witnesses, so expanding
  // witnesses in discovery order visits them in (level, position) order.
  std::deque<int> queue = {root.state};
  while (missing > 0 && !queue.empty()) {
    const WitnessNode parent = pre[queue.front()];
    queue.pop_front();
    if (parent.level() >= count) break;
    for (int j = 0; j < spec.branching; ++j) {
      const int child_state = spec.states.child(parent.state, j);
      if (seen[child_state]) continue;
      pre[child_state] = child_witness(spec, parent, j);
      seen[child_state] = true;
      queue.push_back(child_state);
      --missing;
    }
  }
  if (missing > 0)
    throw std::logic_error("some states were never reached; validate should have caught this");
  return pre;
}

void check_pre_regularity(const BSpecification& spec, const std::vector<WitnessNode>& pre,
                          RegularityReport& report) {
  for (int s = 0; s < spec.states.state_count; ++s) {
    if (affine_dimension_cols(pre[s].points) != spec.dimension)
      report.violations.push_back(
          {"P2'", pre[s].describe(spec.branching) + " does not span the full dimension"});
    for (int j = 0; j < spec.branching; ++j) {
      const PointMatrix child = pre[s].points.mul(spec.matrix(s, j));
      const int child_state = spec.states.child(s, j);
      if (!matrix_equivalence(child, pre[child_state].points))
        report.violations.push_back(
            {"P1'", "child " + std::to_string(j) + " of " + pre[s].describe(spec.branching) +
                        " is not equivalent to the witness of state " +
                        std::to_string(child_state)});
    }
  }
}

FacetSpec enumerate_facets(const BSpecification& spec, const std::vector<WitnessNode>& pre) {
  std::vector<PointMatrix> state_points;
  state_points.reserve(pre.size());
  for (const auto& witness : pre) state_points.push_back(witness.points);
  return enumerate_facets(spec, state_points);
}

Representation find_representation(const BSpecification& spec, const FacetSpec& facets,
                                   std::vector<WitnessNode> pre, RegularityReport& report) {
  Representation rep;
  rep.pre = std::move(pre);

  std::deque<AdjacencyTriple> work;
  std::set<AdjacencyTriple> failed_r1;

  // Records (v, w) sharing facet fv of v and fw of w, or checks R1' against
  // the pair already standing for that triple.
  auto record = [&](const WitnessNode& v, const WitnessNode& w, int fv, int fw) {
    const AdjacencyTriple key = {v.state, w.state, fv};
    auto it = rep.pairs.find(key);
    if (it == rep.pairs.end()) {
      rep.pairs.emplace(key, RepPair{v, w, fv, fw});
      work.push_back(key);
      return;
    }
    const RepPair& stored = it->second;
    if (failed_r1.count(key)) return;
    if (!matrix_pair_equivalence(stored.v.points, stored.w.points, v.points, w.points)) {
      failed_r1.insert(key);
      report.violations.push_back(
          {"R1'", "triple (" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
                      ",facet " + std::to_string(fv) + "): pair " +
                      stored.v.describe(spec.branching) + " / " +
                      stored.w.describe(spec.branching) + " is not equivalent to pair " +
                      v.describe(spec.branching) + " / " + w.describe(spec.branching)});
    }
  };

  auto scan_pair = [&](const WitnessNode& a, const WitnessNode& b) {
    if (!boxes_touch(bounding_box(a.points), bounding_box(b.points))) return;
    const auto sets_a = node_facet_sets(facets, a);
    const auto sets_b = node_facet_sets(facets, b);
    for (size_t f = 0; f < sets_a.size(); ++f)
      for (size_t g = 0; g < sets_b.size(); ++g)
        if (sets_a[f] == sets_b[g]) {
          record(a, b, (int)f, (int)g);
          record(b, a, (int)g, (int)f);
        }
  };

  for (int s = 0; s < spec.states.state_count; ++s) {
    const auto children = children_of(spec, rep.pre[s]);
    for (int i = 0; i < spec.branching; ++i)
      for (int j = i + 1; j < spec.branching; ++j)
        scan_pair(children[i], children[j]);
  }

  std::set<AdjacencyTriple> scanned;
  while (!work.empty()) {
    const AdjacencyTriple key = work.front();
    work.pop_front();
    const RepPair pair = rep.pairs.at(key);  // copy: rep.pairs grows below
    const AdjacencyTriple mirror = {key[1], key[0], pair.facet_w};
    if (scanned.count(mirror)) continue;
    scanned.insert(key);
    const auto left = children_of(spec, pair.v);
    const auto right = children_of(spec, pair.w);
    for (const auto& a : left)
      for (const auto& b : right)
        scan_pair(a, b);
  }
  return rep;
}

namespace {

// Is the polytope spanned by `vertices` a face of `hull` (over `points`)?
// A face is cut out by the facets containing it, so collect those facets'
// common columns and compare point sets.
bool is_face_of(const ConvexHull& hull, const PointMatrix& points,
                const std::vector<RVector>& vertices) {
  std::vector<const HullFacet*> active;
  for (const auto& facet : hull.facets) {
    bool contains_all = true;
    for (const auto& p : vertices)
      if (facet.plane.eval(p) != 0) { contains_all = false; break; }
    if (contains_all) active.push_back(&facet);
  }
  if (active.empty()) return false;

  std::set<RVector> face_points;
  for (int col : hull.vertex_cols) {
    const RVector p = points.col(col - 1);
    bool on_all = true;
    for (const auto* facet : active)
      if (facet->plane.eval(p) != 0) { on_all = false; break; }
    if (on_all) face_points.insert(p);
  }
  return std::vector<RVector>(face_points.begin(), face_points.end()) == vertices;
}

} // namespace

void check_regularity(const BSpecification& spec, const FacetSpec& facets,
                      const Representation& rep, RegularityReport& report) {
  (void)facets;
  for (int s = 0; s < spec.states.state_count; ++s) {
    const ConvexHull parent_hull = convex_hull(rep.pre[s].points);
    for (int j = 0; j < spec.branching; ++j) {
      const PointMatrix child = rep.pre[s].points.mul(spec.matrix(s, j));
      bool inside = true;
      for (int c = 0; c < child.cols() && inside; ++c)
        for (const auto& facet : parent_hull.facets)
          if (facet.plane.eval(child.col(c)) > 0) { inside = false; break; }
      if (!inside)
        report.violations.push_back(
            {"R2'", "child " + std::to_string(j) + " of " + rep.pre[s].describe(spec.branching) +
                        " sticks out of its parent"});
    }
  }

  // Cell pairs whose intersection the dichotomy must hold for: siblings under
  // each witness, and children across each adjacent pair.
  auto check_cells = [&](const WitnessNode& a, const WitnessNode& b) {
    const Box box_a = bounding_box(a.points), box_b = bounding_box(b.points);
    if (!boxes_touch(box_a, box_b)) return;
    const ConvexHull hull_a = convex_hull(a.points);
    const ConvexHull hull_b = convex_hull(b.points);
    const auto vertices = intersection_vertices(hull_a, hull_b);
    if (vertices.empty()) return;
    if (!is_face_of(hull_a, a.points, vertices) || !is_face_of(hull_b, b.points, vertices)) {
      report.violations.push_back(
          {"R3'", a.describe(spec.branching) + " and " + b.describe(spec.branching) +
                      " meet in a set of dimension " +
                      std::to_string(affine_dimension(vertices)) +
                      " that is not a common face"});
    }
  };

  for (int s = 0; s < spec.states.state_count; ++s) {
    const auto children = children_of(spec, rep.pre[s]);
    for (int i = 0; i < spec.branching; ++i)
      for (int j = i + 1; j < spec.branching; ++j)
        check_cells(children[i], children[j]);
  }
  std::set<AdjacencyTriple> done;
  for (const auto& [key, pair] : rep.pairs) {
    const AdjacencyTriple mirror = {key[1], key[0], pair.facet_w};
    if (done.count(mirror)) continue;
    done.insert(key);
    const auto left = children_of(spec, pair.v);
    const auto right = children_of(spec, pair.w);
    for (const auto& a : left)
      for (const auto& b : right)
        check_cells(a, b);
  }
}

} // namespace sfc
