#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "matineq/registry.hpp"
#include "matineq/verdict.hpp"

namespace matineq {

using Json = nlohmann::json;

// Matrices travel as row-major arrays of [re, im] pairs.
inline Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "matrix JSON must be a nonempty array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (const Json& row : j) {
    require(static_cast<int>(row.size()) == cols, "ragged matrix JSON");
    for (const Json& cell : row) {
      if (cell.is_array()) {
        require(cell.size() == 2, "matrix cell must be [re, im]");
        entries.emplace_back(cell.at(0).get<double>(),
                             cell.at(1).get<double>());
      } else {
        entries.emplace_back(cell.get<double>(), 0.0);
      }
    }
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

inline Json to_json(const Verdict& v) {
  Json links = Json::array();
  for (const Link& l : v.links) {
    links.push_back(Json{{"from", l.lo_label},
                         {"to", l.hi_label},
                         {"lo", l.lo},
                         {"hi", l.hi},
                         {"slack", l.slack},
                         {"scale", l.scale}});
  }
  Json chain = Json::array();
  for (const auto& [label, value] : v.chain())
    chain.push_back(Json{{"label", label}, {"value", value}});
  return Json{{"check_id", v.check_id},
              {"variant", to_string(v.variant)},
              {"inputs_digest", v.inputs_digest},
              {"chain", std::move(chain)},
              {"slacks", v.slacks()},
              {"links", std::move(links)},
              {"holds", v.holds},
              {"tol_used", v.tol_used},
              {"min_slack", v.min_slack}};
}

inline Json to_json(const ScalarSample& s) {
  return Json{{"a", s.a}, {"b", s.b}, {"nu", s.nu}, {"label", s.label}};
}

inline Json to_json(const MatrixSample& s) {
  return Json{{"A", to_json(s.a.matrix())},
              {"B", to_json(s.b.matrix())},
              {"X", to_json(s.x)},
              {"nu", s.nu},
              {"label", s.label}};
}

inline Json to_json(const SampleConfig& c) {
  return Json{{"seed", c.seed},
              {"n", c.n},
              {"count", c.count},
              {"scalar_range", Json::array({c.scalar_lo, c.scalar_hi})},
              {"nu_grid", c.nus()},
              {"include_structured", c.include_structured}};
}

inline SampleConfig config_from_json(const Json& j) {
  SampleConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("n")) c.n = j.at("n").get<int>();
  if (j.contains("count")) c.count = j.at("count").get<int>();
  if (j.contains("samples")) c.count = j.at("samples").get<int>();
  if (j.contains("scalar_range")) {
    c.scalar_lo = j.at("scalar_range").at(0).get<double>();
    c.scalar_hi = j.at("scalar_range").at(1).get<double>();
  }
  if (j.contains("nu_grid"))
    c.nu_grid = j.at("nu_grid").get<std::vector<double>>();
  if (j.contains("include_structured"))
    c.include_structured = j.at("include_structured").get<bool>();
  require(c.scalar_lo > 0.0 && c.scalar_hi > c.scalar_lo,
          "scalar_range must satisfy 0 < lo < hi");
  require(c.n >= 1 && c.n <= kMaxDim, "n must lie in [1, 64]");
  require(c.count >= 0, "count must be nonnegative");
  for (double nu : c.nu_grid)
    require(nu >= 0.0 && nu <= 1.0, "nu grid values must lie in [0, 1]");
  return c;
}

}  // namespace matineq
