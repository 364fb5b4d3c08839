#include "sfc/spec_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace sfc {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix must be a row array");
  RationalMatrix m((int)rows.size(), (int)rows[0].size());
  for (int r = 0; r < m.rows(); ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || (int)row.size() != m.cols())
      throw std::invalid_argument("matrix rows have uneven length");
    for (int c = 0; c < m.cols(); ++c)
      m.at(r, c) = row[c].is_string() ? parse_rational(row[c].get<std::string>())
                                      : Rational(row[c].get<long long>());
  }
  return m;
}

} // namespace

std::string spec_to_json(const BSpecification& spec) {
  Json j;
  j["dimension"] = spec.dimension;
  j["branching"] = spec.branching;
  j["state_count"] = spec.states.state_count;
  j["root_state"] = spec.states.root_state;
  j["child_state"] = spec.states.child_state;
  j["vertex_counts"] = spec.vertex_counts;
  j["root_points"] = matrix_to_json(spec.root_points);
  Json matrices = Json::object();
  for (int s = 0; s < spec.states.state_count; ++s)
    for (int d = 0; d < spec.branching; ++d)
      matrices[std::to_string(s) + "," + std::to_string(d)] = matrix_to_json(spec.matrix(s, d));
  j["matrices"] = std::move(matrices);
  if (spec.cube) {
    j["cube"] = {{"refinement", spec.cube->refinement},
                 {"mode", spec.cube->mode == CubeMode::global ? "global" : "local"}};
  }
  return j.dump(2) + "\n";
}

BSpecification spec_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("specification is not valid json: ") + e.what());
  }
  try {
    BSpecification spec;
    spec.dimension = j.at("dimension").get<int>();
    spec.branching = j.at("branching").get<int>();
    spec.states.state_count = j.at("state_count").get<int>();
    spec.states.root_state = j.at("root_state").get<int>();
    spec.states.child_state = j.at("child_state").get<std::vector<std::vector<int>>>();
    spec.vertex_counts = j.at("vertex_counts").get<std::vector<int>>();
    spec.root_points = matrix_from_json(j.at("root_points"));
    spec.matrices.resize(spec.states.state_count);
    for (int s = 0; s < spec.states.state_count; ++s)
      for (int d = 0; d < spec.branching; ++d) {
        const std::string key = std::to_string(s) + "," + std::to_string(d);
        spec.matrices[s].push_back(matrix_from_json(j.at("matrices").at(key)));
      }
    if (j.contains("cube")) {
      const std::string mode = j.at("cube").at("mode").get<std::string>();
      if (mode != "global" && mode != "local")
        throw std::invalid_argument("cube mode must be global or local");
      spec.cube = CubeProvenance{j.at("cube").at("refinement").get<int>(),
                                 mode == "global" ? CubeMode::global : CubeMode::local};
    }
    validate(spec);
    return spec;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed specification: ") + e.what());
  }
}

} // namespace sfc
