/* Microbenchmarks: node bookkeeping, the general engine, and the kernels.
 *
 * The interesting comparisons are history steps at level 10 against level
 * 1000 (shared ancestor chains keep the step cost flat apart from big-integer
 * position arithmetic) and engine queries at level 5 against level 30 (the
 * ascent usually stops after one or two levels regardless of depth).
 */

#include <random>

#include <benchmark/benchmark.h>

#include "sfc/catalog.hpp"
#include "sfc/fast.hpp"
#include "sfc/neighbor.hpp"
#include "sfc/nodes.hpp"
#include "sfc/tables.hpp"

namespace {

using namespace sfc;

const BSpecification& hilbert_spec() {
  static const BSpecification spec = catalog_curve("hilbert2d").spec;
  return spec;
}

const CurveTables& hilbert_tables() {
  static const CurveTables tables = *compile_curve(hilbert_spec()).tables;
  return tables;
}

AlgebraicNode random_node(const CurveTables& t, int level, std::mt19937_64& rng) {
  AlgebraicNode node{level, 0, t.root_state};
  for (int i = 0; i < level; ++i) {
    const int digit = (int)(rng() % t.branching);
    node.position = node.position * t.branching + digit;
    node.state = t.child_state[node.state][digit];
  }
  return node;
}

void BM_HistoryStep(benchmark::State& state) {
  const BSpecification& spec = hilbert_spec();
  HistoryNode node = history_root(spec);
  for (int i = 0; i < (int)state.range(0); ++i) node = tree_child(spec, node, 0);
  for (auto _ : state) {
    HistoryNode child = tree_child(spec, node, 1);
    HistoryNode back = tree_parent(spec, child);
    benchmark::DoNotOptimize(back.position);
  }
}
BENCHMARK(BM_HistoryStep)->Arg(10)->Arg(1000);

void BM_NeighborRecursive(benchmark::State& state) {
  const CurveTables& t = hilbert_tables();
  const int level = (int)state.range(0);
  std::mt19937_64 rng(7);
  AlgebraicNode node = random_node(t, level, rng);
  for (auto _ : state) {
    const int facet = (int)(rng() % 4);
    const auto result = neighbor(t, node, facet);
    node = result ? *result : random_node(t, level, rng);
    benchmark::DoNotOptimize(node.position);
  }
}
BENCHMARK(BM_NeighborRecursive)->Arg(5)->Arg(30);

void BM_NeighborIterative(benchmark::State& state) {
  const CurveTables& t = hilbert_tables();
  const int level = (int)state.range(0);
  std::mt19937_64 rng(7);
  AlgebraicNode node = random_node(t, level, rng);
  for (auto _ : state) {
    const int facet = (int)(rng() % 4);
    const auto result = neighbor_iterative(t, node, facet);
    node = result ? *result : random_node(t, level, rng);
    benchmark::DoNotOptimize(node.position);
  }
}
BENCHMARK(BM_NeighborIterative)->Arg(5)->Arg(30);

void BM_HilbertKernel(benchmark::State& state) {
  const int level = 25;
  std::mt19937_64 rng(7);
  std::uint64_t position = rng() & ((std::uint64_t(1) << (2 * level)) - 1);
  for (auto _ : state) {
    const int facet = (int)(rng() % 4);
    const auto result = hilbert2d_neighbor_fast(level, position, facet);
    position = result ? *result : rng() & ((std::uint64_t(1) << (2 * level)) - 1);
    benchmark::DoNotOptimize(position);
  }
}
BENCHMARK(BM_HilbertKernel);

void BM_HilbertStateFast(benchmark::State& state) {
  std::mt19937_64 rng(7);
  for (auto _ : state) {
    const std::uint64_t position = rng() & ((std::uint64_t(1) << 50) - 1);
    benchmark::DoNotOptimize(hilbert2d_state_fast(25, position));
  }
}
BENCHMARK(BM_HilbertStateFast);

void BM_MortonKernel(benchmark::State& state) {
  const int level = 25;
  std::mt19937_64 rng(7);
  std::uint64_t position = rng() & ((std::uint64_t(1) << (2 * level)) - 1);
  for (auto _ : state) {
    const int facet = (int)(rng() % 4);
    const auto result = morton_neighbor(2, level, position, facet);
    position = result ? *result : rng() & ((std::uint64_t(1) << (2 * level)) - 1);
    benchmark::DoNotOptimize(position);
  }
}
BENCHMARK(BM_MortonKernel);

void BM_SierpinskiKernel(benchmark::State& state) {
  const int level = 40;
  std::mt19937_64 rng(7);
  std::uint64_t position = rng() & ((std::uint64_t(1) << level) - 1);
  for (auto _ : state) {
    const int facet = (int)(rng() % 3);
    const auto result = sierpinski2d_neighbor_fast(level, position, facet);
    position = result ? *result : rng() & ((std::uint64_t(1) << level) - 1);
    benchmark::DoNotOptimize(position);
  }
}
BENCHMARK(BM_SierpinskiKernel);

void BM_PeanoKernel(benchmark::State& state) {
  static const PeanoKernel kernel(2);
  const int level = 20;
  std::uint64_t limit = 1;
  for (int i = 0; i < level; ++i) limit *= 9;
  std::mt19937_64 rng(7);
  std::uint64_t position = rng() % limit;
  for (auto _ : state) {
    const int facet = (int)(rng() % 4);
    const auto result = kernel.neighbor(level, position, facet);
    position = result ? *result : rng() % limit;
    benchmark::DoNotOptimize(position);
  }
}
BENCHMARK(BM_PeanoKernel);

} // namespace

BENCHMARK_MAIN();
