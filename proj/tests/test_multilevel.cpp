#include "doctest.h"

#include <stdexcept>

#include "sfc/catalog.hpp"
#include "sfc/multilevel.hpp"
#include "sfc/neighbor.hpp"
#include "sfc/tables.hpp"

using namespace sfc;

namespace {

CurveTables tables_for(const char* name) {
  auto compiled = compile_curve(catalog_curve(name).spec);
  if (!compiled.tables) throw std::runtime_error("curve failed to compile");
  return *compiled.tables;
}

} // namespace

TEST_CASE("depth one reproduces the single-level tables") {
  for (const char* name : {"hilbert2d", "sierpinski2d", "peano2"}) {
    auto t = tables_for(name);
    auto m = build_multilevel(t, 1);
    CHECK(m.depth == 1);
    CHECK(m.block == t.branching);
    CHECK(m.state_count == t.state_count);
    CHECK(m.block_state == t.child_state);
    CHECK(m.block_parent_state == t.parent_state);
    CHECK(m.n_table == t.n_table);
    CHECK(m.fp_table == t.fp_table);
    CHECK(m.omega_table == t.omega_table);
  }
}

TEST_CASE("block states fold the transition table") {
  auto t = tables_for("hilbert2d");
  auto m = build_multilevel(t, 2);
  CHECK(m.block == 16);
  for (int s = 0; s < t.state_count; ++s)
    for (int i = 0; i < m.block; ++i) {
      const int mid = t.child_state[s][i / 4];
      CHECK(m.block_state[s][i] == t.child_state[mid][i % 4]);
    }
}

TEST_CASE("block queries agree with single-level queries") {
  auto t = tables_for("hilbert2d");
  StateSystem sys{t.state_count, t.root_state, t.child_state};
  for (int depth : {2, 3}) {
    auto m = build_multilevel(t, depth);
    for (int level = 0; level <= 4; ++level) {
      for (BigInt pos = 0; pos < BigInt(1) << (2 * level); ++pos) {
        AlgebraicNode node{level, pos,
                           compute_state(sys, position_digits(pos, level, t.branching))};
        for (int f = 0; f < t.facet_counts[node.state]; ++f) {
          auto flat = neighbor_iterative(t, node, f);
          auto block = neighbor_multilevel(m, t, node, f);
          CHECK(flat.has_value() == block.has_value());
          if (flat && block) {
            CHECK(flat->position == block->position);
            CHECK(flat->state == block->state);
          }
        }
      }
    }
  }
}

TEST_CASE("the golden deep query runs on blocks too") {
  auto t = tables_for("hilbert2d");
  auto m = build_multilevel(t, 2);
  AlgebraicNode node{3, 28, 3};
  auto right = neighbor_multilevel(m, t, node, 1);
  REQUIRE(right.has_value());
  CHECK(right->position == BigInt(35));
  CHECK(right->state == 3);
}

TEST_CASE("oversized block tables are refused") {
  auto t = tables_for("hilbert2d");
  CHECK_THROWS_AS(build_multilevel(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_multilevel(t, 15), std::invalid_argument);
}

TEST_CASE("block serialization carries its own format tag") {
  auto t = tables_for("sierpinski2d");
  auto m = build_multilevel(t, 3);
  auto text = serialize_multilevel(m);
  CHECK(text.substr(0, 19) == "sfc-block-tables 1\n");
  // Two builds serialize identically.
  CHECK(serialize_multilevel(build_multilevel(t, 3)) == text);
}
