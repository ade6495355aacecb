#include "akv/json_io.hpp"

namespace akv {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix JSON must be a nonempty array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw Error("matrix JSON rows have inconsistent lengths");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& cell = row.at(k);
      m(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

Json space_to_json(const HermitianSpace& s) {
  return Json{{"dim", s.dim}, {"label", s.label}, {"gram", matrix_to_json(s.gram)}};
}

Json graded_to_json(const GradedClass& c) {
  Json d1 = Json::object();
  for (const auto& [g, v] : c.deg1()) d1[g.str()] = to_string(v);
  Json d2 = Json::object();
  for (const auto& [m, v] : c.deg2()) d2[m.str()] = to_string(v);
  return Json{{"deg0", to_string(c.deg0())}, {"deg1", std::move(d1)},
              {"deg2", std::move(d2)}};
}

Json base_to_json(const BaseClass& b) {
  Json p = Json::object();
  for (const auto& [m, v] : b.pushed()) p[m.str()] = to_string(v);
  return Json{{"pushed", std::move(p)}, {"analytic", to_string(b.analytic())}};
}

Json symbol_to_json(const BundleSymbol& s) {
  Json j{{"name", s.name},
         {"rank", s.rank},
         {"flavor", flavor_name(s.flavor)},
         {"c1", graded_to_json(s.c1)},
         {"c2", graded_to_json(s.c2)}};
  if (!s.provenance.empty()) j["provenance"] = s.provenance;
  return j;
}

Json pairing_report_to_json(const PairingReport& r) {
  Json lambdas = Json::array();
  for (const auto& [label, value] : r.lambdas)
    lambdas.push_back(Json{{"label", label}, {"value", base_to_json(value)}});
  return Json{{"lhs", base_to_json(r.lhs)},
              {"rhs", base_to_json(r.rhs)},
              {"equal", r.equal},
              {"lambdas", std::move(lambdas)},
              {"parameters",
               Json{{"rank_a", r.rank_a},
                    {"rank_m", r.rank_m},
                    {"rank_n", r.rank_n},
                    {"n", r.morita},
                    {"g", to_string(r.genus)}}},
              {"rank_hypothesis", r.rank_hypothesis}};
}

}  // namespace akv
