#include "sfc/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "sfc/tables.hpp"

namespace sfc {

namespace {

// ---------------------------------------------------------------------------
// Morton: one state, children in bit order, axis 0 in the low bit.

KDSpecification morton_kd(int dimension) {
  KDSpecification kd;
  kd.refinement = 2;
  kd.dimension = dimension;
  kd.states.state_count = 1;
  kd.states.root_state = 0;
  kd.states.child_state = {std::vector<int>(1 << dimension, 0)};
  kd.child_order.resize(1);
  for (int j = 0; j < (1 << dimension); ++j) {
    std::vector<int> cell(dimension);
    for (int i = 0; i < dimension; ++i) cell[i] = (j >> i) & 1;
    kd.child_order[0].push_back(std::move(cell));
  }
  kd.orientation = {CubeSymmetry::identity(dimension)};
  return kd;
}

// ---------------------------------------------------------------------------
// Hilbert in the plane: states H, A, B, R; A and B swap the diagonal, R turns
// the cell half way round.

KDSpecification hilbert2d_kd() {
  KDSpecification kd;
  kd.refinement = 2;
  kd.dimension = 2;
  kd.states.state_count = 4;
  kd.states.root_state = 0;
  kd.states.child_state = {{1, 0, 0, 2}, {0, 1, 1, 3}, {3, 2, 2, 0}, {2, 3, 3, 1}};
  kd.child_order = {
      {{0, 0}, {0, 1}, {1, 1}, {1, 0}},
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
      {{1, 1}, {0, 1}, {0, 0}, {1, 0}},
      {{1, 1}, {1, 0}, {0, 0}, {0, 1}},
  };
  kd.orientation = {
      {{0, 1}, {false, false}},
      {{1, 0}, {false, false}},
      {{1, 0}, {true, true}},
      {{0, 1}, {true, true}},
  };
  return kd;
}

// ---------------------------------------------------------------------------
// Peano: states are sign vectors, one bit per axis (set = descending). The
// digit of axis i is the i-th ternary digit of the child index; an axis runs
// backwards when its sign times the parity of all higher digits is negative.
// A digit flips the signs of all other axes when it is odd.

// Drops states the root cannot reach and renumbers the rest in index order.
void restrict_to_reachable(KDSpecification& kd) {
  const std::vector<int> keep = reachable_states(kd.states);
  if ((int)keep.size() == kd.states.state_count) return;
  std::vector<int> renumber(kd.states.state_count, -1);
  for (int i = 0; i < (int)keep.size(); ++i) renumber[keep[i]] = i;
  KDSpecification out = kd;
  out.states.state_count = (int)keep.size();
  out.states.root_state = renumber[kd.states.root_state];
  out.states.child_state.clear();
  out.child_order.clear();
  out.orientation.clear();
  for (int s : keep) {
    std::vector<int> row = kd.states.child_state[s];
    for (int& c : row) c = renumber[c];
    out.states.child_state.push_back(std::move(row));
    out.child_order.push_back(kd.child_order[s]);
    if (!kd.orientation.empty()) out.orientation.push_back(kd.orientation[s]);
  }
  kd = std::move(out);
}

KDSpecification peano_kd(int dimension) {
  KDSpecification kd;
  kd.refinement = 3;
  kd.dimension = dimension;
  const int state_count = 1 << dimension;
  int b = 1;
  for (int i = 0; i < dimension; ++i) b *= 3;
  kd.states.state_count = state_count;
  kd.states.root_state = 0;
  kd.states.child_state.resize(state_count);
  kd.child_order.resize(state_count);
  for (int mask = 0; mask < state_count; ++mask) {
    for (int j = 0; j < b; ++j) {
      std::vector<int> digit(dimension);
      for (int i = 0, rest = j; i < dimension; ++i, rest /= 3) digit[i] = rest % 3;
      std::vector<int> cell(dimension);
      int higher = 0;  // digit sum over axes above i, accumulated downwards
      for (int i = dimension - 1; i >= 0; --i) {
        const bool descending = (((mask >> i) & 1) + higher) % 2 != 0;
        cell[i] = descending ? 2 - digit[i] : digit[i];
        higher += digit[i];
      }
      int odd = 0;
      for (int i = 0; i < dimension; ++i) odd += digit[i] % 2;
      int next = mask;
      for (int i = 0; i < dimension; ++i)
        if ((odd - digit[i] % 2) % 2 != 0) next ^= 1 << i;
      kd.child_order[mask].push_back(std::move(cell));
      kd.states.child_state[mask].push_back(next);
    }
    std::vector<int> axis(dimension);
    std::iota(axis.begin(), axis.end(), 0);
    std::vector<bool> flip(dimension);
    for (int i = 0; i < dimension; ++i) flip[i] = (mask >> i) & 1;
    kd.orientation.push_back({std::move(axis), std::move(flip)});
  }
  // In odd dimensions a transition flips an even number of signs, so only
  // half the sign vectors ever occur.
  restrict_to_reachable(kd);
  return kd;
}

// ---------------------------------------------------------------------------
// Hilbert in space. The children follow a Gray path c_0..c_7 through the
// subcells and each child is a rotated copy of the whole, the rotation fixed
// by where it sends the curve's entry and exit corners. Writing e_j and t_j
// for those images, a continuous self-similar curve needs
//
//   e_0 = c_0 = 0,   t_7 = c_7,   c_j + t_j = c_(j+1) + e_(j+1),
//
// with every (e_j, t_j) a directed cube edge, so each rotation is unique.
// Unlike the plane there are many solutions; the search below walks Gray
// paths and transition chains in a fixed order and keeps the first solution
// whose states close into twelve rotations, the variant usually drawn.
// Solutions with other closure sizes are kept as a fallback.

struct Rotation {
  std::array<int, 9> m{};  // row major, entries -1, 0, 1
};

Rotation rotation_identity() {
  Rotation r;
  r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  return r;
}

Rotation rotation_mul(const Rotation& a, const Rotation& b) {
  Rotation out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a.m[i * 3 + k] * b.m[k * 3 + j];
      out.m[i * 3 + j] = s;
    }
  return out;
}

// Corners sit at coordinates 2c - 1 per axis; bit i of the index is axis i.
int rotation_apply_corner(const Rotation& r, int corner) {
  int out = 0;
  for (int i = 0; i < 3; ++i) {
    int s = 0;
    for (int j = 0; j < 3; ++j) s += r.m[i * 3 + j] * (2 * ((corner >> j) & 1) - 1);
    if (s > 0) out |= 1 << i;
  }
  return out;
}

const std::vector<Rotation>& cube_rotations() {
  static const std::vector<Rotation> rotations = [] {
    std::vector<Rotation> out;
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        Rotation r;
        for (int i = 0; i < 3; ++i) r.m[i * 3 + perm[i]] = (signs >> i) & 1 ? -1 : 1;
        const int det = r.m[0] * (r.m[4] * r.m[8] - r.m[5] * r.m[7]) -
                        r.m[1] * (r.m[3] * r.m[8] - r.m[5] * r.m[6]) +
                        r.m[2] * (r.m[3] * r.m[7] - r.m[4] * r.m[6]);
        if (det == 1) out.push_back(r);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return rotations;
}

// The rotation group is simply transitive on directed edges, so the image of
// one directed edge determines the element.
const Rotation& rotation_for_edge(int from, int to, int image_from, int image_to) {
  for (const Rotation& r : cube_rotations())
    if (rotation_apply_corner(r, from) == image_from && rotation_apply_corner(r, to) == image_to)
      return r;
  throw std::logic_error("no rotation maps the requested edge");
}

void gray_paths_step(std::array<int, 8>& path, int length, unsigned used,
                     std::vector<std::array<int, 8>>& out) {
  if (length == 8) {
    out.push_back(path);
    return;
  }
  for (int axis = 0; axis < 3; ++axis) {
    const int next = path[length - 1] ^ (1 << axis);
    if (used & (1u << next)) continue;
    path[length] = next;
    gray_paths_step(path, length + 1, used | (1u << next), out);
  }
}

struct Hilbert3dCandidate {
  std::array<int, 8> cells{};
  std::array<Rotation, 8> child_rotation{};
};

void hilbert3d_chains(const std::array<int, 8>& cells, int j, int entry,
                      Hilbert3dCandidate& partial, std::vector<Hilbert3dCandidate>& out) {
  const int exit_corner = cells[7];
  if (j == 7) {
    if (std::popcount(unsigned(entry ^ exit_corner)) != 1) return;
    partial.child_rotation[7] = rotation_for_edge(0, exit_corner, entry, exit_corner);
    out.push_back(partial);
    return;
  }
  for (int axis = 0; axis < 3; ++axis) {
    const int transit = entry ^ (1 << axis);
    // The joint corner c_j + t_j must reappear as c_(j+1) + e_(j+1).
    int next_entry = 0;
    bool valid = true;
    for (int i = 0; i < 3 && valid; ++i) {
      const int c = ((cells[j] >> i) & 1) + ((transit >> i) & 1) - ((cells[j + 1] >> i) & 1);
      if (c < 0 || c > 1) valid = false;
      next_entry |= (c & 1) << i;
    }
    if (!valid) continue;
    partial.child_rotation[j] = rotation_for_edge(0, exit_corner, entry, transit);
    hilbert3d_chains(cells, j + 1, next_entry, partial, out);
  }
}

KDSpecification hilbert3d_candidate_kd(const Hilbert3dCandidate& cand) {
  std::map<std::array<int, 9>, int> index;
  std::vector<Rotation> states;
  states.push_back(rotation_identity());
  index[states[0].m] = 0;
  KDSpecification kd;
  kd.refinement = 2;
  kd.dimension = 3;
  for (int s = 0; s < (int)states.size(); ++s) {
    kd.states.child_state.emplace_back();
    kd.child_order.emplace_back();
    for (int j = 0; j < 8; ++j) {
      const Rotation child = rotation_mul(states[s], cand.child_rotation[j]);
      auto [it, fresh] = index.try_emplace(child.m, (int)states.size());
      if (fresh) states.push_back(child);
      kd.states.child_state[s].push_back(it->second);
      kd.child_order[s].push_back(
          corner_coords(rotation_apply_corner(states[s], cand.cells[j]), 3));
    }
  }
  kd.states.state_count = (int)states.size();
  kd.states.root_state = 0;
  return kd;
}

KDSpecification hilbert3d_search() {
  std::vector<std::array<int, 8>> paths;
  std::array<int, 8> path{};
  gray_paths_step(path, 1, 1u, paths);

  std::vector<Hilbert3dCandidate> candidates;
  for (const auto& cells : paths) {
    if (std::popcount(unsigned(cells[7])) != 1) continue;  // exit must neighbour the entry
    Hilbert3dCandidate partial;
    partial.cells = cells;
    hilbert3d_chains(cells, 0, 0, partial, candidates);
  }

  std::optional<KDSpecification> fallback;
  for (const Hilbert3dCandidate& cand : candidates) {
    KDSpecification kd = hilbert3d_candidate_kd(cand);
    if (kd.states.state_count == 12) {
      if (compile_curve(kd_to_b_spec(kd, CubeMode::global)).report.ok()) return kd;
    } else if (!fallback) {
      fallback = std::move(kd);
    }
  }
  for (const Hilbert3dCandidate& cand : candidates) {
    KDSpecification kd = hilbert3d_candidate_kd(cand);
    if (kd.states.state_count != 12 &&
        compile_curve(kd_to_b_spec(kd, CubeMode::global)).report.ok())
      return kd;
  }
  throw std::logic_error("no regular spatial hilbert construction found");
}

const KDSpecification& hilbert3d_kd() {
  static const KDSpecification kd = hilbert3d_search();
  return kd;
}

// ---------------------------------------------------------------------------
// Sierpinski: a right isosceles triangle split along its height. Points are
// listed entry, right angle, exit; the shared point of the halves is the
// midpoint of the hypotenuse.

BSpecification sierpinski2d_local_spec() {
  const Rational h(1, 2);
  BSpecification spec;
  spec.dimension = 2;
  spec.branching = 2;
  spec.states.state_count = 1;
  spec.states.root_state = 0;
  spec.states.child_state = {{0, 0}};
  spec.vertex_counts = {3};
  spec.root_points = RationalMatrix::from_rows({{0, 1, 1}, {0, 0, 1}});
  spec.matrices = {{
      RationalMatrix::from_rows({{1, h, 0}, {0, 0, 1}, {0, h, 0}}),
      RationalMatrix::from_rows({{0, h, 0}, {1, 0, 0}, {0, h, 1}}),
  }};
  return spec;
}

// The global variant keeps one state per congruence class of the similarity
// from the root, eight in all, and lists every cell's vertices in
// lexicographic order instead of traversal order. Classes are tracked as
// integer matrices modulo positive scale: the halving maps have linear parts
// [[1,1],[1,-1]]/2 and [[-1,1],[1,1]]/2, whose products normalise to a
// dihedral group of order eight.

BSpecification sierpinski2d_global_spec() {
  using Class = std::array<int, 4>;  // row major 2x2
  const std::array<Class, 2> generator = {Class{1, 1, 1, -1}, Class{-1, 1, 1, 1}};
  const auto normalize = [](Class m) {
    int g = 0;
    for (int v : m) g = std::gcd(g, std::abs(v));
    if (g > 1)
      for (int& v : m) v /= g;
    return m;
  };
  const auto mul = [](const Class& a, const Class& b) {
    return Class{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                 a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  };

  std::map<Class, int> index;
  std::vector<Class> classes{Class{1, 0, 0, 1}};
  index[classes[0]] = 0;
  StateSystem states;
  for (int s = 0; s < (int)classes.size(); ++s) {
    states.child_state.emplace_back();
    for (const Class& gen : generator) {
      const Class child = normalize(mul(classes[s], gen));
      auto [it, fresh] = index.try_emplace(child, (int)classes.size());
      if (fresh) classes.push_back(child);
      states.child_state[s].push_back(it->second);
    }
  }
  states.state_count = (int)classes.size();
  states.root_state = 0;
  if (states.state_count != 8) throw std::logic_error("sierpinski classes do not close into eight");

  // Entry, right angle, exit of the class representative.
  const auto triangle = [](const Class& g) {
    std::vector<RVector> t(3);
    t[0] = {Rational(0), Rational(0)};
    t[1] = {Rational(g[0]), Rational(g[2])};
    t[2] = {Rational(g[0] + g[1]), Rational(g[2] + g[3])};
    return t;
  };
  const auto sorted_cols = [](std::vector<RVector> t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  // Weights of each target point over the sorted parent vertices.
  const auto combination_matrix = [](const std::vector<RVector>& parent,
                                     const std::vector<RVector>& target) {
    RationalMatrix sys(3, 3);
    for (int c = 0; c < 3; ++c) {
      sys.at(0, c) = parent[c][0];
      sys.at(1, c) = parent[c][1];
      sys.at(2, c) = 1;
    }
    RationalMatrix m(3, 3);
    for (int c = 0; c < 3; ++c) {
      const auto weights = solve_linear(sys, {target[c][0], target[c][1], Rational(1)});
      if (!weights) throw std::logic_error("degenerate sierpinski representative");
      m.set_col(c, *weights);
    }
    return m;
  };

  BSpecification spec;
  spec.dimension = 2;
  spec.branching = 2;
  spec.states = states;
  spec.vertex_counts.assign(8, 3);
  spec.root_points = RationalMatrix::from_rows({{0, 1, 1}, {0, 0, 1}});
  spec.matrices.resize(8);
  for (int s = 0; s < 8; ++s) {
    const std::vector<RVector> t = triangle(classes[s]);
    const std::vector<RVector> parent = sorted_cols(t);
    RVector mid(2);
    for (int i = 0; i < 2; ++i) mid[i] = (t[0][i] + t[2][i]) / 2;
    const std::vector<RVector> halves[2] = {{t[0], mid, t[1]}, {t[1], mid, t[2]}};
    for (const auto& half : halves)
      spec.matrices[s].push_back(combination_matrix(parent, sorted_cols(half)));
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Gosper: seven hexagons filling a larger one, up to the fractal boundary.
// Points live in coordinates over the basis (1, w) of the triangular lattice,
// w^2 = w - 1; an affine change of basis maps them onto the drawn curve, and
// every predicate the pipeline checks is affine invariant. The parent hexagon
// is the child grid scaled by 2 + w, which is why its corners cut through the
// children: the construction only tiles in the limit, a violation the
// regularity check reports.

BSpecification gosper2d_spec() {
  // (a + bw)(c + dw) = (ac - bd) + (ad + bc + bd) w
  const auto eis_mul = [](const RVector& p, const RVector& q) {
    return RVector{p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0] + p[1] * q[1]};
  };
  std::vector<RVector> corner(6);  // unit hexagon around the origin
  corner[0] = {Rational(1, 3), Rational(1, 3)};
  const RVector w{Rational(0), Rational(1)};
  for (int k = 1; k < 6; ++k) corner[k] = eis_mul(corner[k - 1], w);
  const RVector scale{Rational(2), Rational(1)};  // 2 + w, the replication factor

  BSpecification spec;
  spec.dimension = 2;
  spec.branching = 7;
  spec.states.state_count = 2;
  spec.states.root_state = 0;
  spec.states.child_state = {{0, 1, 1, 0, 0, 0, 1}, {0, 1, 1, 1, 0, 0, 1}};
  spec.vertex_counts = {6, 6};
  spec.root_points = PointMatrix(2, 6);
  for (int k = 0; k < 6; ++k) spec.root_points.set_col(k, eis_mul(scale, corner[k]));

  const std::vector<int> basis = affine_basis_cols(spec.root_points);
  RationalMatrix sys(3, 3);
  for (int c = 0; c < 3; ++c) {
    sys.at(0, c) = spec.root_points.at(0, basis[c]);
    sys.at(1, c) = spec.root_points.at(1, basis[c]);
    sys.at(2, c) = 1;
  }
  const int center[7][2] = {{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, 0}, {0, -1}};
  std::vector<RationalMatrix> children;
  for (const auto& c : center) {
    RationalMatrix m(6, 6);
    for (int k = 0; k < 6; ++k) {
      const RVector target{corner[k][0] + c[0], corner[k][1] + c[1]};
      const auto weights = solve_linear(sys, {target[0], target[1], Rational(1)});
      if (!weights) throw std::logic_error("degenerate gosper root hexagon");
      for (int i = 0; i < 3; ++i) m.at(basis[i], k) = (*weights)[i];
    }
    children.push_back(std::move(m));
  }
  spec.matrices = {children, children};
  return spec;
}

// ---------------------------------------------------------------------------

CatalogEntry cube_entry(std::string name, const KDSpecification& kd, CubeMode mode) {
  return CatalogEntry{std::move(name), kd_to_b_spec(kd, mode), kd};
}

// Dimension suffix of names like morton3 or peano2_local; -1 when absent.
int name_dimension(const std::string& name, const std::string& family, std::string* suffix) {
  if (name.rfind(family, 0) != 0) return -1;
  std::size_t i = family.size(), start = i;
  while (i < name.size() && std::isdigit((unsigned char)name[i])) ++i;
  if (i == start || i > start + 1) return -1;
  *suffix = name.substr(i);
  return name[start] - '0';
}

} // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "morton2",          "morton3",           "hilbert2d_global", "hilbert2d_local",
      "hilbert3d_global", "peano2_global",     "peano2_local",     "peano3_global",
      "peano3_local",     "sierpinski2d_local", "sierpinski2d_global", "gosper2d",
  };
  return names;
}

CatalogEntry catalog_curve(const std::string& name) {
  std::string suffix;
  const int morton_dim = name_dimension(name, "morton", &suffix);
  if (morton_dim >= 1 && morton_dim <= 6 && suffix.empty())
    return cube_entry(name, morton_kd(morton_dim), CubeMode::global);

  const int peano_dim = name_dimension(name, "peano", &suffix);
  if (peano_dim >= 1 && peano_dim <= 4 && (suffix.empty() || suffix == "_global"))
    return cube_entry("peano" + std::to_string(peano_dim) + "_global", peano_kd(peano_dim),
                      CubeMode::global);
  if (peano_dim >= 1 && peano_dim <= 4 && suffix == "_local")
    return cube_entry(name, peano_kd(peano_dim), CubeMode::local);

  if (name == "hilbert2d" || name == "hilbert2d_global")
    return cube_entry("hilbert2d_global", hilbert2d_kd(), CubeMode::global);
  if (name == "hilbert2d_local") return cube_entry(name, hilbert2d_kd(), CubeMode::local);
  if (name == "hilbert3d" || name == "hilbert3d_global")
    return cube_entry("hilbert3d_global", hilbert3d_kd(), CubeMode::global);

  if (name == "sierpinski2d" || name == "sierpinski2d_local")
    return CatalogEntry{"sierpinski2d_local", sierpinski2d_local_spec(), std::nullopt};
  if (name == "sierpinski2d_global")
    return CatalogEntry{name, sierpinski2d_global_spec(), std::nullopt};
  if (name == "gosper2d") return CatalogEntry{name, gosper2d_spec(), std::nullopt};

  throw std::invalid_argument("unknown curve: " + name);
}

} // namespace sfc
