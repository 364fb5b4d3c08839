#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>

#include "sfc/catalog.hpp"
#include "sfc/fast.hpp"
#include "sfc/neighbor.hpp"
#include "sfc/tables.hpp"

using namespace sfc;

namespace {

CurveTables tables_for(const char* name) {
  auto compiled = compile_curve(catalog_curve(name).spec);
  if (!compiled.tables) throw std::runtime_error("curve failed to compile");
  return *compiled.tables;
}

AlgebraicNode node_at(const CurveTables& t, int level, const BigInt& position) {
  StateSystem sys{t.state_count, t.root_state, t.child_state};
  return {level, position, compute_state(sys, position_digits(position, level, t.branching))};
}

} // namespace

TEST_CASE("hilbert states from the bit kernel") {
  auto spec = catalog_curve("hilbert2d").spec;
  CHECK(hilbert2d_state_fast(0, 0) == 0);
  CHECK(hilbert2d_state_fast(2, 1) == 1);
  CHECK(hilbert2d_state_fast(3, 28) == 3);
  for (int level = 0; level <= 6; ++level)
    for (std::uint64_t pos = 0; pos < (std::uint64_t)1 << (2 * level); ++pos)
      CHECK(hilbert2d_state_fast(level, pos) == compute_state(spec, level, BigInt(pos)));
}

TEST_CASE("hilbert neighbors from the bit kernel") {
  auto t = tables_for("hilbert2d");
  CHECK(hilbert2d_neighbor_fast(2, 1, 3) == 2);
  CHECK(hilbert2d_neighbor_fast(2, 1, 0) == 0);
  CHECK(hilbert2d_neighbor_fast(2, 1, 1) == 14);
  CHECK(!hilbert2d_neighbor_fast(2, 1, 2).has_value());
  CHECK(hilbert2d_neighbor_fast(3, 28, 1) == 35);

  for (int level = 0; level <= 6; ++level)
    for (std::uint64_t pos = 0; pos < (std::uint64_t)1 << (2 * level); ++pos)
      for (int f = 0; f < 4; ++f) {
        auto engine = neighbor_iterative(t, node_at(t, level, pos), f);
        auto fast = hilbert2d_neighbor_fast(level, pos, f);
        REQUIRE(engine.has_value() == fast.has_value());
        if (engine) CHECK(BigInt(*fast) == engine->position);
      }
}

TEST_CASE("morton neighbors in two and three dimensions") {
  for (int d : {2, 3}) {
    auto t = tables_for(d == 2 ? "morton2" : "morton3");
    const int max_level = d == 2 ? 5 : 3;
    for (int level = 0; level <= max_level; ++level)
      for (std::uint64_t pos = 0; pos < (std::uint64_t)1 << (d * level); ++pos)
        for (int f = 0; f < 2 * d; ++f) {
          auto engine = neighbor_iterative(t, node_at(t, level, pos), f);
          auto fast = morton_neighbor(d, level, pos, f);
          REQUIRE(engine.has_value() == fast.has_value());
          if (engine) CHECK(BigInt(*fast) == engine->position);
        }
  }
}

TEST_CASE("sierpinski neighbors from the bit kernel") {
  auto t = tables_for("sierpinski2d");
  CHECK(sierpinski2d_neighbor_fast(2, 1, 1) == 2);
  CHECK(!sierpinski2d_neighbor_fast(2, 0, 1).has_value());

  for (int level = 0; level <= 10; ++level)
    for (std::uint64_t pos = 0; pos < (std::uint64_t)1 << level; ++pos)
      for (int f = 0; f < 3; ++f) {
        auto engine = neighbor_iterative(t, node_at(t, level, pos), f);
        auto fast = sierpinski2d_neighbor_fast(level, pos, f);
        REQUIRE(engine.has_value() == fast.has_value());
        if (engine) CHECK(BigInt(*fast) == engine->position);
      }
}

TEST_CASE("peano neighbors from the palindrome kernel") {
  PeanoKernel kernel(2);
  CHECK(kernel.dimension() == 2);
  CHECK(kernel.facet_count() == 4);
  // Facet 2 is the cell-frame right leg of the lexicographic ordering.
  CHECK(kernel.neighbor(2, 2, 2) == 15);

  // The kernel implements the collapsed single-state construction, so the
  // matching engine is the local variant.
  auto t = tables_for("peano2_local");
  for (int level = 0; level <= 4; ++level) {
    std::uint64_t count = 1;
    for (int i = 0; i < level; ++i) count *= 9;
    for (std::uint64_t pos = 0; pos < count; ++pos)
      for (int f = 0; f < 4; ++f) {
        auto engine = neighbor_iterative(t, node_at(t, level, pos), f);
        auto fast = kernel.neighbor(level, pos, f);
        REQUIRE(engine.has_value() == fast.has_value());
        if (engine) CHECK(BigInt(*fast) == engine->position);
      }
  }
}

TEST_CASE("the wide and narrow peano kernels agree") {
  PeanoKernel kernel(2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int level = 1 + (int)(rng() % 19);
    std::uint64_t count = 1;
    for (int i = 0; i < level; ++i) count *= 9;
    const std::uint64_t pos = rng() % count;
    const int f = (int)(rng() % 4);
    auto narrow = kernel.neighbor(level, pos, f);
    auto wide = kernel.neighbor(level, BigInt(pos), f);
    CHECK(narrow.has_value() == wide.has_value());
    if (narrow) CHECK(BigInt(*narrow) == *wide);
  }
}

TEST_CASE("deep random probes stay consistent with the engine") {
  auto t = tables_for("hilbert2d");
  std::mt19937_64 rng(11);
  const int level = 25;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t pos = rng() % ((std::uint64_t)1 << (2 * level));
    const int f = (int)(rng() % 4);
    auto engine = neighbor_iterative(t, node_at(t, level, pos), f);
    auto fast = hilbert2d_neighbor_fast(level, pos, f);
    REQUIRE(engine.has_value() == fast.has_value());
    if (engine) CHECK(BigInt(*fast) == engine->position);
  }
}

TEST_CASE("kernels validate their inputs") {
  CHECK_THROWS_AS(hilbert2d_neighbor_fast(2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(hilbert2d_neighbor_fast(2, 16, 0), std::invalid_argument);
  CHECK_THROWS_AS(hilbert2d_neighbor_fast(33, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(morton_neighbor(7, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(sierpinski2d_neighbor_fast(65, 0, 0), std::invalid_argument);
  PeanoKernel kernel(2);
  CHECK_THROWS_AS(kernel.neighbor(21, (std::uint64_t)0, 0), std::invalid_argument);
  CHECK_NOTHROW(kernel.neighbor(21, BigInt(0), 0));
  CHECK_THROWS_AS(PeanoKernel(5), std::invalid_argument);
}
