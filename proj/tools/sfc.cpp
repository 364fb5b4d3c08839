/* sfc: compile, query, and draw space filling curves from the command line. */

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfc/catalog.hpp"
#include "sfc/fast.hpp"
#include "sfc/group.hpp"
#include "sfc/isomorphism.hpp"
#include "sfc/multilevel.hpp"
#include "sfc/neighbor.hpp"
#include "sfc/query_bench.hpp"
#include "sfc/spec_io.hpp"
#include "sfc/svg.hpp"
#include "sfc/tables.hpp"

namespace {

using namespace sfc;

struct LoadedCurve {
  std::string name;
  BSpecification spec;
  std::optional<KDSpecification> kd;
};

LoadedCurve load_curve(const std::string& curve, const std::string& spec_path) {
  if (curve.empty() == spec_path.empty())
    throw std::invalid_argument("pass exactly one of --curve and --spec");
  if (!curve.empty()) {
    CatalogEntry entry = catalog_curve(curve);
    return {entry.name, std::move(entry.spec), std::move(entry.kd)};
  }
  std::ifstream in(spec_path);
  if (!in) throw std::runtime_error("cannot open " + spec_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return {spec_path, spec_from_json(buffer.str()), std::nullopt};
}

nlohmann::ordered_json report_json(const LoadedCurve& lc, const CompiledCurve& compiled) {
  nlohmann::ordered_json j;
  j["curve"] = lc.name;
  j["states"] = lc.spec.states.state_count;
  j["branching"] = lc.spec.branching;
  j["regular"] = compiled.report.ok();
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : compiled.report.violations)
    violations.push_back({{"clause", v.clause}, {"witness", v.witness}});
  j["violations"] = std::move(violations);
  if (compiled.tables) j["palindrome"] = compiled.tables->palindrome;
  return j;
}

CurveTables compile_or_fail(const LoadedCurve& lc) {
  CompiledCurve compiled = compile_curve(lc.spec);
  if (!compiled.tables) {
    std::cerr << report_json(lc, compiled).dump(2) << "\n";
    throw std::runtime_error(lc.name + " is not a regular specification");
  }
  return std::move(*compiled.tables);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int parse_facet(const std::string& text, const BSpecification& spec, const CurveTables& tables) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  static const std::vector<std::string> names = {"left", "right", "down", "up", "back", "front"};
  const auto it = std::find(names.begin(), names.end(), text);
  if (it == names.end()) throw std::invalid_argument("unknown facet " + text);
  if (!spec.cube || spec.cube->mode != CubeMode::global)
    throw std::invalid_argument("named facets need the axis numbering of a cube curve");
  const int facet = (int)(it - names.begin());
  if (facet >= 2 * spec.dimension) throw std::invalid_argument("facet " + text + " needs more axes");
  (void)tables;
  return facet;
}

BigInt parse_position(const std::string& text) {
  try {
    return BigInt(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("positions are decimal integers, got " + text);
  }
}

void check_position(const BigInt& position, int level, int branching) {
  BigInt limit = 1;
  for (int i = 0; i < level; ++i) limit *= branching;
  if (position < 0 || position >= limit)
    throw std::invalid_argument("position out of range for level " + std::to_string(level));
}

// ---------------------------------------------------------------------------

int run_tables(const LoadedCurve& lc, int depth, const std::string& out_path) {
  CompiledCurve compiled = compile_curve(lc.spec);
  if (!compiled.tables) {
    std::cerr << report_json(lc, compiled).dump(2) << "\n";
    return 1;
  }
  write_output(out_path, depth == 1
                             ? serialize_tables(*compiled.tables)
                             : serialize_multilevel(build_multilevel(*compiled.tables, depth)));
  return 0;
}

int run_verify(const LoadedCurve& lc) {
  const CompiledCurve compiled = compile_curve(lc.spec);
  std::cout << report_json(lc, compiled).dump(2) << "\n";
  return compiled.report.ok() ? 0 : 1;
}

int run_group(const LoadedCurve& lc) {
  const auto info = state_group(lc.spec.states);
  if (!info) {
    std::cout << "the digit maps are not invertible; the states generate no group\n";
    return 1;
  }
  std::cout << "order " << info->order << "\n";
  std::cout << "abelian " << (info->is_abelian ? "yes" : "no") << "\n";
  for (std::size_t j = 0; j < info->generators.size(); ++j) {
    std::cout << "digit " << j << ":";
    for (int image : info->generators[j]) std::cout << ' ' << image;
    std::cout << "\n";
  }
  for (std::size_t i = 0; i < info->elements.size(); ++i) {
    std::cout << "element " << i << ":";
    for (int image : info->elements[i]) std::cout << ' ' << image;
    std::cout << "\n";
  }
  return 0;
}

int run_neighbor(const LoadedCurve& lc, int level, const std::string& position_text,
                 const std::string& facet_text, int assume_state, int depth) {
  const CurveTables tables = compile_or_fail(lc);
  const BigInt position = parse_position(position_text);
  check_position(position, level, tables.branching);
  const int facet = parse_facet(facet_text, lc.spec, tables);

  std::optional<AlgebraicNode> result;
  if (assume_state >= 0) {
    if (assume_state >= tables.state_count) throw std::invalid_argument("no such state");
    if (depth != 1) throw std::invalid_argument("--assume-state works on single-level tables");
    auto answers = neighbor_with_wrong_state(tables, level, position, assume_state);
    if (facet < 0 || facet >= (int)answers.size())
      throw std::invalid_argument("facet out of range");
    result = answers[facet];
  } else {
    AlgebraicNode node{level, position, compute_state(lc.spec, level, position)};
    if (depth == 1) {
      result = neighbor_iterative(tables, node, facet);
    } else {
      const MultiLevelTables blocks = build_multilevel(tables, depth);
      result = neighbor_multilevel(blocks, tables, node, facet);
    }
  }
  if (result)
    std::cout << "position " << result->position.str() << " state " << result->state << "\n";
  else
    std::cout << "none\n";
  return 0;
}

int run_state(const LoadedCurve& lc, int level, const std::string& position_text, bool fast) {
  const BigInt position = parse_position(position_text);
  check_position(position, level, lc.spec.branching);
  if (fast) {
    if (lc.name.rfind("hilbert2d", 0) != 0)
      throw std::invalid_argument("--fast is specialised to hilbert2d");
    std::cout << hilbert2d_state_fast(level, position.convert_to<std::uint64_t>()) << "\n";
    return 0;
  }
  std::cout << compute_state(lc.spec, level, position) << "\n";
  return 0;
}

int run_coords(const LoadedCurve& lc, int level, const std::string& position_text,
               const std::string& point_text) {
  if (!lc.kd)
    throw std::invalid_argument("coordinate conversion needs a cube construction from the catalog");
  if (position_text.empty() == point_text.empty())
    throw std::invalid_argument("pass exactly one of --position and --point");
  if (!position_text.empty()) {
    const BigInt position = parse_position(position_text);
    check_position(position, level, lc.spec.branching);
    const std::vector<BigInt> coords = position_to_coords(*lc.kd, level, position);
    for (std::size_t i = 0; i < coords.size(); ++i)
      std::cout << (i ? " " : "") << coords[i].str();
    std::cout << "\n";
    return 0;
  }
  std::vector<BigInt> coords;
  std::stringstream in(point_text);
  std::string part;
  while (std::getline(in, part, ',')) coords.push_back(parse_position(part));
  if ((int)coords.size() != lc.kd->dimension)
    throw std::invalid_argument("expected " + std::to_string(lc.kd->dimension) + " coordinates");
  std::cout << coords_to_position(*lc.kd, level, coords).str() << "\n";
  return 0;
}

int run_render(const LoadedCurve& lc, const RenderOptions& options, const std::string& out_path) {
  write_output(out_path, render_svg(lc.spec, options));
  return 0;
}

// ---------------------------------------------------------------------------

struct BenchRequest {
  std::string kernel = "iterative";
  int level_from = 5, level_to = 5;
  long long samples = 5000000;
  int reps = 15;
  int depth = 1;
  std::uint64_t seed = 42;
};

double fast_kernel_median(const LoadedCurve& lc, int level, const BenchRequest& req) {
  std::function<std::optional<std::uint64_t>(int, std::uint64_t, int)> query;
  int facets = 0, branching = lc.spec.branching;
  std::optional<PeanoKernel> peano;
  if (lc.name.rfind("hilbert2d", 0) == 0) {
    query = hilbert2d_neighbor_fast;
    facets = 4;
  } else if (lc.name.rfind("morton", 0) == 0) {
    const int d = lc.spec.dimension;
    query = [d](int l, std::uint64_t p, int f) { return morton_neighbor(d, l, p, f); };
    facets = 2 * d;
  } else if (lc.name.rfind("sierpinski2d", 0) == 0) {
    query = sierpinski2d_neighbor_fast;
    facets = 3;
  } else if (lc.name.rfind("peano", 0) == 0) {
    peano.emplace(lc.spec.dimension);
    query = [&peano](int l, std::uint64_t p, int f) { return peano->neighbor(l, p, f); };
    facets = peano->facet_count();
  } else {
    throw std::invalid_argument("no specialised kernel for " + lc.name);
  }

  std::mt19937_64 rng(req.seed);
  const auto random_position = [&] {
    std::uint64_t p = 0;
    for (int i = 0; i < level; ++i) p = p * branching + rng() % branching;
    return p;
  };
  std::uint64_t checksum = 0;
  std::vector<double> query_ns(req.reps), plain_ns(req.reps);
  for (int rep = 0; rep < req.reps; ++rep) {
    std::uint64_t position = random_position();
    const auto t0 = std::chrono::steady_clock::now();
    for (long long i = 0; i < req.samples; ++i) {
      const int f = (int)(rng() % facets);
      const auto result = query(level, position, f);
      if (result) {
        position = *result;
        checksum += position;
      } else {
        position = random_position();
      }
    }
    const auto t1 = std::chrono::steady_clock::now();
    query_ns[rep] = std::chrono::duration<double, std::nano>(t1 - t0).count() / req.samples;

    std::uint64_t position2 = 0;
    const auto t2 = std::chrono::steady_clock::now();
    for (long long i = 0; i < req.samples; ++i) {
      position2 += rng() % facets;
      checksum += position2;
    }
    const auto t3 = std::chrono::steady_clock::now();
    plain_ns[rep] = std::chrono::duration<double, std::nano>(t3 - t2).count() / req.samples;
  }
  if (checksum == ~std::uint64_t(0)) query_ns[0] += 0;
  std::sort(query_ns.begin(), query_ns.end());
  std::sort(plain_ns.begin(), plain_ns.end());
  return std::max(0.0, query_ns[req.reps / 2] - plain_ns[req.reps / 2]);
}

double multilevel_median(const CurveTables& tables, const MultiLevelTables& blocks, int level,
                         const BenchRequest& req) {
  std::mt19937_64 rng(req.seed);
  const auto random_node = [&] {
    AlgebraicNode node{level, 0, tables.root_state};
    for (int i = 0; i < level; ++i) {
      const int digit = (int)(rng() % tables.branching);
      node.position = node.position * tables.branching + digit;
      node.state = tables.child_state[node.state][digit];
    }
    return node;
  };
  std::uint64_t checksum = 0;
  std::vector<double> query_ns(req.reps), plain_ns(req.reps);
  for (int rep = 0; rep < req.reps; ++rep) {
    AlgebraicNode node = random_node();
    const auto t0 = std::chrono::steady_clock::now();
    for (long long i = 0; i < req.samples; ++i) {
      const int f = (int)(rng() % tables.facet_counts[node.state]);
      const auto result = neighbor_multilevel(blocks, tables, node, f);
      if (result) {
        node = *result;
        checksum += (std::uint64_t)node.state;
      } else {
        node = random_node();
      }
    }
    const auto t1 = std::chrono::steady_clock::now();
    query_ns[rep] = std::chrono::duration<double, std::nano>(t1 - t0).count() / req.samples;

    int state = tables.root_state;
    const auto t2 = std::chrono::steady_clock::now();
    for (long long i = 0; i < req.samples; ++i) {
      const int f = (int)(rng() % tables.facet_counts[state]);
      checksum += (std::uint64_t)f;
      state = tables.child_state[state][f % tables.branching];
    }
    const auto t3 = std::chrono::steady_clock::now();
    plain_ns[rep] = std::chrono::duration<double, std::nano>(t3 - t2).count() / req.samples;
  }
  if (checksum == ~std::uint64_t(0)) query_ns[0] += 0;
  std::sort(query_ns.begin(), query_ns.end());
  std::sort(plain_ns.begin(), plain_ns.end());
  return std::max(0.0, query_ns[req.reps / 2] - plain_ns[req.reps / 2]);
}

int run_bench(const LoadedCurve& lc, const BenchRequest& req) {
  if (req.kernel != "general" && req.kernel != "iterative" && req.kernel != "fast")
    throw std::invalid_argument("kernel must be general, iterative, or fast");
  if (req.kernel == "fast" && req.depth != 1)
    throw std::invalid_argument("specialised kernels take no block depth");
  if (req.reps < 1 || req.reps % 2 == 0)
    throw std::invalid_argument("reps must be a positive odd number");

  std::optional<CurveTables> tables;
  std::optional<MultiLevelTables> blocks;
  if (req.kernel != "fast") {
    tables = compile_or_fail(lc);
    if (req.depth > 1) blocks = build_multilevel(*tables, req.depth);
  }

  std::cout << "curve,kernel,level,depth,median_ns,samples,reps\n";
  for (int level = req.level_from; level <= req.level_to; ++level) {
    double median = 0;
    if (req.kernel == "fast") {
      median = fast_kernel_median(lc, level, req);
    } else if (blocks) {
      median = multilevel_median(*tables, *blocks, level, req);
    } else {
      median = chained_query_bench(*tables, level, req.samples, req.reps, req.seed,
                                   req.kernel == "general" ? EngineKind::recursive
                                                           : EngineKind::iterative)
                   .median_ns;
    }
    std::cout << lc.name << ',' << req.kernel << ',' << level << ',' << req.depth << ','
              << median << ',' << req.samples << ',' << req.reps << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"space filling curve toolkit"};
  app.require_subcommand(1);

  std::string curve, spec_path, out_path, position_text, point_text, facet_text;
  int level = 0, depth = 1, assume_state = -1;
  bool fast = false;

  const auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--curve", curve, "catalog curve name");
    cmd->add_option("--spec", spec_path, "specification file (json)");
  };

  CLI::App* tables_cmd = app.add_subcommand("tables", "compile neighbor tables");
  add_source(tables_cmd);
  tables_cmd->add_option("--depth", depth, "levels per block")->check(CLI::PositiveNumber);
  tables_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check the regularity conditions");
  add_source(verify_cmd);

  CLI::App* group_cmd = app.add_subcommand("group", "group generated by the digit maps");
  add_source(group_cmd);

  CLI::App* neighbor_cmd = app.add_subcommand("neighbor", "facet neighbor of one cell");
  add_source(neighbor_cmd);
  neighbor_cmd->add_option("--level", level, "tree level")->required()->check(CLI::NonNegativeNumber);
  neighbor_cmd->add_option("--position", position_text, "cell index on its level")->required();
  neighbor_cmd->add_option("--facet", facet_text, "facet id or axis name")->required();
  neighbor_cmd->add_option("--assume-state", assume_state, "query under a forced leaf state");
  neighbor_cmd->add_option("--depth", depth, "levels per block")->check(CLI::PositiveNumber);

  CLI::App* state_cmd = app.add_subcommand("state", "state of one cell");
  add_source(state_cmd);
  state_cmd->add_option("--level", level, "tree level")->required()->check(CLI::NonNegativeNumber);
  state_cmd->add_option("--position", position_text, "cell index on its level")->required();
  state_cmd->add_flag("--fast", fast, "use the popcount shortcut (hilbert2d)");

  CLI::App* coords_cmd = app.add_subcommand("coords", "convert position and grid coordinates");
  add_source(coords_cmd);
  coords_cmd->add_option("--level", level, "tree level")->required()->check(CLI::NonNegativeNumber);
  coords_cmd->add_option("--position", position_text, "cell index on its level");
  coords_cmd->add_option("--point", point_text, "comma separated grid coordinates");

  RenderOptions render_options;
  std::string labels = "none", base = "10";
  CLI::App* render_cmd = app.add_subcommand("render", "draw cells and traversal as svg");
  add_source(render_cmd);
  render_cmd->add_option("--level", render_options.level, "cell level")
      ->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--offset", render_options.curve_offset,
                         "draw the traversal this many levels deeper (0 or 1)");
  render_cmd->add_option("--labels", labels, "none, positions, or states");
  render_cmd->add_option("--base", base, "position labels in base 10 or b");
  render_cmd->add_option("--size", render_options.size, "page edge in pixels");
  render_cmd->add_option("--out", out_path, "output file (default stdout)");

  BenchRequest bench;
  std::string levels_text = "5";
  CLI::App* bench_cmd = app.add_subcommand("bench", "time neighbor queries");
  add_source(bench_cmd);
  bench_cmd->add_option("--kernel", bench.kernel, "general, iterative, or fast");
  bench_cmd->add_option("--levels", levels_text, "level or range a..b");
  bench_cmd->add_option("--samples", bench.samples, "queries per repetition")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", bench.reps, "repetitions (odd)")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--depth", bench.depth, "levels per block")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    const LoadedCurve lc = load_curve(curve, spec_path);
    if (tables_cmd->parsed()) return run_tables(lc, depth, out_path);
    if (verify_cmd->parsed()) return run_verify(lc);
    if (group_cmd->parsed()) return run_group(lc);
    if (neighbor_cmd->parsed())
      return run_neighbor(lc, level, position_text, facet_text, assume_state, depth);
    if (state_cmd->parsed()) return run_state(lc, level, position_text, fast);
    if (coords_cmd->parsed()) return run_coords(lc, level, position_text, point_text);
    if (render_cmd->parsed()) {
      if (labels == "positions") render_options.labels = CellLabels::positions;
      else if (labels == "states") render_options.labels = CellLabels::states;
      else if (labels != "none") throw std::invalid_argument("labels must be none, positions, or states");
      if (base == "b") render_options.digit_labels = true;
      else if (base != "10") throw std::invalid_argument("base must be 10 or b");
      return run_render(lc, render_options, out_path);
    }
    if (bench_cmd->parsed()) {
      const auto dots = levels_text.find("..");
      if (dots == std::string::npos) {
        bench.level_from = bench.level_to = std::stoi(levels_text);
      } else {
        bench.level_from = std::stoi(levels_text.substr(0, dots));
        bench.level_to = std::stoi(levels_text.substr(dots + 2));
      }
      if (bench.level_from < 0 || bench.level_to < bench.level_from)
        throw std::invalid_argument("bad level range");
      return run_bench(lc, bench);
    }
  } catch (const std::exception& e) {
    std::cerr << "sfc: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
