#include "sfc/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sfc/hull.hpp"
#include "sfc/nodes.hpp"

namespace sfc {

namespace {

struct ChildData {
  int state;
  PointMatrix points;
  Box box;
  std::vector<std::vector<RVector>> facet_sets;
};

std::vector<ChildData> expand_children(const BSpecification& spec, const FacetSpec& facets,
                                       int state, const PointMatrix& points) {
  std::vector<ChildData> children(spec.branching);
  for (int j = 0; j < spec.branching; ++j) {
    ChildData& child = children[j];
    child.state = spec.states.child(state, j);
    child.points = points.mul(spec.matrix(state, j));
    child.box = bounding_box(child.points);
    const auto& sets = facets.index_sets[child.state];
    child.facet_sets.resize(sets.size());
    for (size_t f = 0; f < sets.size(); ++f)
      child.facet_sets[f] = facet_point_set(child.points, sets[f]);
  }
  return children;
}

// Supporting planes of a witness cell, indexed by its canonical facet ids.
std::vector<Hyperplane> canonical_planes(const FacetSpec& facets, int state,
                                         const PointMatrix& points) {
  const auto& sets = facets.index_sets[state];
  const ConvexHull hull = convex_hull(points);
  std::vector<Hyperplane> planes(sets.size());
  std::vector<bool> filled(sets.size(), false);
  for (const auto& facet : hull.facets) {
    bool matched = false;
    for (size_t f = 0; f < sets.size(); ++f)
      if (sets[f] == facet.vertex_cols) {
        planes[f] = facet.plane;
        filled[f] = true;
        matched = true;
        break;
      }
    if (!matched) throw std::logic_error("hull facet missing from the facet tables");
  }
  for (bool b : filled)
    if (!b) throw std::logic_error("facet table entry missing from the hull");
  return planes;
}

} // namespace

bool check_palindrome(const CurveTables& tables) {
  for (int s = 0; s < tables.state_count; ++s)
    for (int sp = 0; sp < tables.state_count; ++sp)
      for (int j = 0; j < tables.branching; ++j)
        for (int f = 0; f < tables.max_facets; ++f) {
          const int i = tables.omega(j, s, sp, f);
          if (i >= 0 && i != tables.branching - 1 - j) return false;
        }
  return true;
}

CurveTables compute_tables(const BSpecification& spec, const FacetSpec& facets,
                           const Representation& rep) {
  CurveTables t;
  t.branching = spec.branching;
  t.state_count = spec.states.state_count;
  t.root_state = spec.states.root_state;
  t.facet_counts.resize(t.state_count);
  for (int s = 0; s < t.state_count; ++s) t.facet_counts[s] = facets.facet_count(s);
  t.max_facets = facets.max_facet_count();
  t.child_state = spec.states.child_state;
  t.parent_state = parent_state_table(spec.states);
  t.facet_spec = facets;

  const int S = t.state_count, b = t.branching, F = t.max_facets;
  t.n_table.assign(S * b * F, -1);
  t.fp_table.assign(S * b * F, -1);
  t.omega_table.assign(S * S * b * F, -1);

  for (int s = 0; s < S; ++s) {
    const auto children = expand_children(spec, facets, s, rep.pre[s].points);
    const auto parent_planes = canonical_planes(facets, s, rep.pre[s].points);
    for (int j = 0; j < b; ++j) {
      for (int f = 0; f < (int)children[j].facet_sets.size(); ++f) {
        const auto& set = children[j].facet_sets[f];

        int sibling = -1;
        for (int j2 = 0; j2 < b; ++j2) {
          if (j2 == j) continue;
          for (const auto& other : children[j2].facet_sets)
            if (other == set) {
              if (sibling >= 0) throw std::logic_error("two siblings share one facet");
              sibling = j2;
            }
        }

        int boundary = -1;
        for (size_t pf = 0; pf < parent_planes.size(); ++pf) {
          bool on_plane = true;
          for (const auto& p : set)
            if (parent_planes[pf].eval(p) != 0) { on_plane = false; break; }
          if (on_plane) {
            if (boundary >= 0) throw std::logic_error("child facet on two parent facets");
            boundary = (int)pf;
          }
        }

        if ((sibling >= 0) == (boundary >= 0))
          throw std::logic_error("child facet must be either shared with a sibling "
                                 "or on the parent boundary");
        const int slot = (s * b + j) * F + f;
        t.n_table[slot] = sibling;
        t.fp_table[slot] = boundary;
      }
    }
  }

  for (const auto& [key, pair] : rep.pairs) {
    const int s = key[0], sp = key[1];
    const auto left = expand_children(spec, facets, pair.v.state, pair.v.points);
    const auto right = expand_children(spec, facets, pair.w.state, pair.w.points);
    for (int j = 0; j < b; ++j)
      for (int f = 0; f < (int)left[j].facet_sets.size(); ++f) {
        for (int i = 0; i < b; ++i) {
          if (!boxes_touch(left[j].box, right[i].box)) continue;
          for (const auto& other : right[i].facet_sets)
            if (other == left[j].facet_sets[f]) {
              int& slot = t.omega_table[((s * S + sp) * b + j) * F + f];
              if (slot >= 0 && slot != i)
                throw std::logic_error("inconsistent omega entry");
              slot = i;
            }
        }
      }
  }

  t.palindrome = check_palindrome(t);
  return t;
}

CompiledCurve compile_curve(const BSpecification& spec) {
  validate(spec);
  CompiledCurve out;
  auto pre = find_pre_representation(spec);
  check_pre_regularity(spec, pre, out.report);
  if (!out.report.clause_ok("P2'")) {
    // Facet enumeration needs full-dimensional witnesses.
    out.rep.pre = std::move(pre);
    return out;
  }
  out.facets = enumerate_facets(spec, pre);
  out.rep = find_representation(spec, out.facets, std::move(pre), out.report);
  check_regularity(spec, out.facets, out.rep, out.report);
  if (out.report.ok()) out.tables = compute_tables(spec, out.facets, out.rep);
  return out;
}

namespace {

void emit_row(std::ostringstream& out, const std::vector<int>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out << ' ';
    out << row[i];
  }
  out << '\n';
}

struct Reader {
  std::istringstream in;

  explicit Reader(const std::string& text) : in(text) {}

  std::string token() {
    std::string t;
    if (!(in >> t)) throw std::runtime_error("tables file ended early");
    return t;
  }
  void expect(const std::string& keyword) {
    const std::string t = token();
    if (t != keyword)
      throw std::runtime_error("tables file: expected '" + keyword + "', got '" + t + "'");
  }
  int number() {
    const std::string t = token();
    size_t used = 0;
    int value;
    try {
      value = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("tables file: expected a number, got '" + t + "'");
    }
    if (used != t.size())
      throw std::runtime_error("tables file: expected a number, got '" + t + "'");
    return value;
  }
};

} // namespace

std::string serialize_tables(const CurveTables& t) {
  std::ostringstream out;
  out << "sfc-tables 1\n";
  out << "branching " << t.branching << '\n';
  out << "states " << t.state_count << '\n';
  out << "root_state " << t.root_state << '\n';
  out << "facet_counts";
  for (int c : t.facet_counts) out << ' ' << c;
  out << '\n';
  out << "palindrome " << (t.palindrome ? 1 : 0) << '\n';

  out << "child_state\n";
  for (const auto& row : t.child_state) emit_row(out, row);
  if (t.parent_state) {
    out << "parent_state\n";
    for (const auto& row : *t.parent_state) emit_row(out, row);
  } else {
    out << "parent_state none\n";
  }

  out << "facet_sets\n";
  for (const auto& per_state : t.facet_spec.index_sets)
    for (const auto& set : per_state) {
      out << set.size();
      for (int col : set) out << ' ' << col;
      out << '\n';
    }

  const int S = t.state_count, b = t.branching, F = t.max_facets;
  out << "n\n";
  for (int s = 0; s < S; ++s)
    for (int j = 0; j < b; ++j) {
      std::vector<int> row(t.child_facet_count(s, j));
      for (int f = 0; f < (int)row.size(); ++f) row[f] = t.n_table[(s * b + j) * F + f];
      emit_row(out, row);
    }
  out << "fp\n";
  for (int s = 0; s < S; ++s)
    for (int j = 0; j < b; ++j) {
      std::vector<int> row(t.child_facet_count(s, j));
      for (int f = 0; f < (int)row.size(); ++f) row[f] = t.fp_table[(s * b + j) * F + f];
      emit_row(out, row);
    }
  out << "omega\n";
  for (int s = 0; s < S; ++s)
    for (int sp = 0; sp < S; ++sp)
      for (int j = 0; j < b; ++j) {
        std::vector<int> row(t.child_facet_count(s, j));
        for (int f = 0; f < (int)row.size(); ++f)
          row[f] = t.omega_table[((s * S + sp) * b + j) * F + f];
        emit_row(out, row);
      }
  return out.str();
}

CurveTables parse_tables(const std::string& text) {
  Reader r(text);
  r.expect("sfc-tables");
  r.expect("1");
  CurveTables t;
  r.expect("branching");
  t.branching = r.number();
  r.expect("states");
  t.state_count = r.number();
  if (t.branching < 2 || t.state_count < 1)
    throw std::runtime_error("tables file: implausible sizes");
  r.expect("root_state");
  t.root_state = r.number();
  r.expect("facet_counts");
  t.facet_counts.resize(t.state_count);
  t.max_facets = 0;
  for (int& c : t.facet_counts) {
    c = r.number();
    t.max_facets = std::max(t.max_facets, c);
  }
  r.expect("palindrome");
  t.palindrome = r.number() != 0;

  const int S = t.state_count, b = t.branching, F = t.max_facets;
  r.expect("child_state");
  t.child_state.assign(S, std::vector<int>(b));
  for (auto& row : t.child_state)
    for (int& x : row) x = r.number();
  r.expect("parent_state");
  {
    const std::string first = r.token();
    if (first != "none") {
      t.parent_state.emplace(S, std::vector<int>(b));
      auto& table = *t.parent_state;
      table[0][0] = std::stoi(first);
      for (int s = 0; s < S; ++s)
        for (int j = 0; j < b; ++j) {
          if (s == 0 && j == 0) continue;
          table[s][j] = r.number();
        }
    }
  }

  r.expect("facet_sets");
  t.facet_spec.index_sets.resize(S);
  for (int s = 0; s < S; ++s) {
    t.facet_spec.index_sets[s].resize(t.facet_counts[s]);
    for (auto& set : t.facet_spec.index_sets[s]) {
      set.resize(r.number());
      for (int& col : set) col = r.number();
    }
  }

  auto read_nf = [&](std::vector<int>& table) {
    table.assign(S * b * F, -1);
    for (int s = 0; s < S; ++s)
      for (int j = 0; j < b; ++j)
        for (int f = 0; f < t.child_facet_count(s, j); ++f)
          table[(s * b + j) * F + f] = r.number();
  };
  r.expect("n");
  read_nf(t.n_table);
  r.expect("fp");
  read_nf(t.fp_table);
  r.expect("omega");
  t.omega_table.assign(S * S * b * F, -1);
  for (int s = 0; s < S; ++s)
    for (int sp = 0; sp < S; ++sp)
      for (int j = 0; j < b; ++j)
        for (int f = 0; f < t.child_facet_count(s, j); ++f)
          t.omega_table[((s * S + sp) * b + j) * F + f] = r.number();
  return t;
}

} // namespace sfc
