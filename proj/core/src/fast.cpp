#include "sfc/fast.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "sfc/catalog.hpp"
#include "sfc/tables.hpp"

namespace sfc {

namespace {

void check_facet(int facet, int count) {
  if (facet < 0 || facet >= count) throw std::invalid_argument("facet out of range");
}

int to_int(std::uint64_t v) { return (int)v; }
int to_int(const BigInt& v) { return v.convert_to<int>(); }

void check_u64_range(int level, int bits_per_level, std::uint64_t position) {
  if (level < 0 || level * bits_per_level > 63)
    throw std::invalid_argument("level too deep for the 64-bit kernel");
  if (level < 64 / bits_per_level && (position >> (level * bits_per_level)) != 0)
    throw std::invalid_argument("position out of range");
}

} // namespace

std::optional<std::uint64_t> morton_neighbor(int dimension, int level, std::uint64_t position,
                                             int facet) {
  if (dimension < 1 || dimension > 6) throw std::invalid_argument("unsupported dimension");
  check_facet(facet, 2 * dimension);
  check_u64_range(level, dimension, position);
  const int axis = facet >> 1;
  std::uint64_t mask = 0;
  for (int i = 0; i < level; ++i) mask |= std::uint64_t(1) << (axis + i * dimension);
  const std::uint64_t along = position & mask;
  if (facet & 1) {
    if (along == mask) return std::nullopt;
    return (((position | ~mask) + (std::uint64_t(1) << axis)) & mask) | (position & ~mask);
  }
  if (along == 0) return std::nullopt;
  return ((along - (std::uint64_t(1) << axis)) & mask) | (position & ~mask);
}

// ---------------------------------------------------------------------------
// Hilbert. States are H, A, B, R; a digit moves the state through the Klein
// group, so the state of a cell only depends on how many of its digits are 0
// and how many are 3, modulo two.

namespace {

constexpr int kHilbertGroup[4] = {1, 0, 0, 2};
// Child cells per state, encoded x + 2y, in traversal order.
constexpr int kHilbertCells[4][4] = {{0, 2, 3, 1}, {0, 1, 3, 2}, {3, 2, 0, 1}, {3, 1, 0, 2}};

struct Hilbert2dTables {
  std::int8_t sibling[4][4][4]{};   // [state][digit][facet]
  std::int8_t omega[4][4][4][4]{};  // [state][neighbor parent state][digit][facet]
};

constexpr Hilbert2dTables make_hilbert2d_tables() {
  Hilbert2dTables t{};
  int digit_of[4][4]{};
  for (int s = 0; s < 4; ++s)
    for (int j = 0; j < 4; ++j) digit_of[s][kHilbertCells[s][j]] = j;
  for (int s = 0; s < 4; ++s)
    for (int j = 0; j < 4; ++j)
      for (int f = 0; f < 4; ++f) {
        const int cell = kHilbertCells[s][j];
        const int axis = f >> 1;
        const int coordinate = axis == 0 ? (cell & 1) : (cell >> 1);
        const int mirrored = cell ^ (axis == 0 ? 1 : 2);
        if (coordinate == (f & 1)) {
          // Cell lies on the parent facet; the neighbor is in another parent.
          t.sibling[s][j][f] = -1;
          for (int sp = 0; sp < 4; ++sp)
            t.omega[s][sp][j][f] = (std::int8_t)digit_of[sp][mirrored];
        } else {
          t.sibling[s][j][f] = (std::int8_t)digit_of[s][mirrored];
          for (int sp = 0; sp < 4; ++sp) t.omega[s][sp][j][f] = -1;
        }
      }
  return t;
}

constexpr Hilbert2dTables kHilbert2d = make_hilbert2d_tables();

} // namespace

int hilbert2d_state_fast(int level, std::uint64_t position) {
  check_u64_range(level, 2, position);
  constexpr std::uint64_t mask = 0x5555555555555555ull;
  const std::uint64_t in_range = level == 0 ? 0 : mask >> (64 - 2 * level);
  const std::uint64_t lo = position & mask;
  const std::uint64_t hi = (position >> 1) & mask;
  const int threes = std::popcount(lo & hi);
  const int zeros = std::popcount(in_range ^ (lo | hi));
  return 2 * (threes & 1) + (zeros & 1);
}

std::optional<std::uint64_t> hilbert2d_neighbor_fast(int level, std::uint64_t position, int facet) {
  check_facet(facet, 4);
  check_u64_range(level, 2, position);
  std::int8_t state[32];
  std::int8_t digit[32];
  int s = 0;
  for (int i = 0; i < level; ++i) {
    const int j = (int)(position >> (2 * (level - 1 - i))) & 3;
    state[i] = (std::int8_t)s;
    digit[i] = (std::int8_t)j;
    s ^= kHilbertGroup[j];
  }
  int k = level - 1;
  int sibling = -1;
  for (; k >= 0; --k) {
    sibling = kHilbert2d.sibling[state[k]][digit[k]][facet];
    if (sibling >= 0) break;
  }
  if (k < 0) return std::nullopt;
  // The ascent never relabels the facet: an axis facet of a cell is the same
  // axis facet of whichever parent it lies on.
  std::uint64_t out = (position >> (2 * (level - k)) << 2) | (unsigned)sibling;
  int sp = state[k] ^ kHilbertGroup[sibling];
  for (int i = k + 1; i < level; ++i) {
    const int d = kHilbert2d.omega[state[i]][sp][digit[i]][facet];
    out = (out << 2) | (unsigned)d;
    sp ^= kHilbertGroup[d];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sierpinski. Facets of a cell are its vertex pairs in lexicographic order:
// 0 = entry leg, 1 = hypotenuse, 2 = exit leg. The two halves meet exit leg
// to entry leg, and every cross-parent descent reverses the digit, so a hit
// after k ascents flips the low k+1 bits.

std::optional<std::uint64_t> sierpinski2d_neighbor_fast(int level, std::uint64_t position,
                                                        int facet) {
  check_facet(facet, 3);
  check_u64_range(level, 1, position);
  int f = facet;
  for (int k = 0; k < level; ++k) {
    const int a = (int)(position >> k) & 1;
    if (a == 0) {
      if (f == 2) return position ^ ((std::uint64_t(1) << (k + 1)) - 1);
      f = 1 - f;  // entry leg lies on the hypotenuse of the parent and back
    } else {
      if (f == 0) return position ^ ((std::uint64_t(1) << (k + 1)) - 1);
      f = 3 - f;  // hypotenuse lies on the exit leg of the parent and back
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

PeanoKernel::PeanoKernel(int dimension) : dimension_(dimension) {
  if (dimension < 1 || dimension > 4) throw std::invalid_argument("unsupported dimension");
  const CompiledCurve compiled =
      compile_curve(catalog_curve("peano" + std::to_string(dimension) + "_local").spec);
  if (!compiled.tables) throw std::logic_error("peano tables failed to compile");
  const CurveTables& t = *compiled.tables;
  if (!t.palindrome) throw std::logic_error("peano tables are not palindromic");
  branching_ = t.branching;
  facet_count_ = t.facet_counts[0];
  sibling_.resize((std::size_t)branching_ * facet_count_);
  parent_facet_.resize((std::size_t)branching_ * facet_count_);
  for (int j = 0; j < branching_; ++j)
    for (int f = 0; f < facet_count_; ++f) {
      sibling_[(std::size_t)j * facet_count_ + f] = t.n(j, 0, f);
      parent_facet_[(std::size_t)j * facet_count_ + f] = t.fp(j, 0, f);
    }
}

template <class Int>
std::optional<Int> PeanoKernel::query(int level, const Int& position, int facet) const {
  check_facet(facet, facet_count_);
  int f = facet;
  Int scale = 1;
  for (int k = 0; k < level; ++k) {
    const Int digit = (position / scale) % branching_;
    const int a = to_int(digit);
    const int hit = sibling_[(std::size_t)a * facet_count_ + f];
    if (hit >= 0) {
      const Int below = position % scale;
      const Int block = position % (scale * branching_);
      // Palindromic descent: the digits under the crossing reverse.
      return position - block + Int(hit) * scale + (scale - 1 - below);
    }
    f = parent_facet_[(std::size_t)a * facet_count_ + f];
    scale *= branching_;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> PeanoKernel::neighbor(int level, std::uint64_t position,
                                                   int facet) const {
  std::uint64_t limit = 1;
  for (int i = 0; i < level; ++i) {
    if (limit > ~std::uint64_t(0) / branching_)
      throw std::invalid_argument("level too deep for the 64-bit kernel");
    limit *= branching_;
  }
  if (position >= limit) throw std::invalid_argument("position out of range");
  return query<std::uint64_t>(level, position, facet);
}

std::optional<BigInt> PeanoKernel::neighbor(int level, const BigInt& position, int facet) const {
  if (level < 0) throw std::invalid_argument("negative level");
  BigInt limit = 1;
  for (int i = 0; i < level; ++i) limit *= branching_;
  if (position < 0 || position >= limit) throw std::invalid_argument("position out of range");
  return query<BigInt>(level, position, facet);
}

} // namespace sfc
