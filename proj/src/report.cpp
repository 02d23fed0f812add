#include "absfact/report.hpp"

namespace absfact {

using nlohmann::json;

json poly_to_json(const SparsePoly& f) {
  json terms = json::array();
  for (auto& [m, c] : f.terms) {
    terms.push_back(json::array({m[0], m[1], c.real(), c.imag()}));
  }
  return terms;
}

json polytope_to_json(const LatticePolytope& P) {
  json vertices = json::array();
  for (auto& v : P.vertices) vertices.push_back(json::array({v[0], v[1]}));
  return json{{"vertices", vertices}};
}

json fan_to_json(const Fan& fan) {
  json rays = json::array();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    rays.push_back(json{{"ray", json::array({fan.rays[i][0], fan.rays[i][1]})},
                        {"exterior", static_cast<bool>(fan.exterior_mask[i])}});
  }
  json dets = json::array();
  for (std::size_t i = 0; i + 1 < fan.size(); ++i) {
    dets.push_back(det(fan.rays[i], fan.rays[i + 1]));
  }
  return json{{"rays", rays}, {"adjacent_dets", dets}};
}

json report_to_json(const FactorReport& report) {
  json factors = json::array();
  for (auto& entry : report.factors) {
    factors.push_back(json{
        {"terms", poly_to_json(entry.poly)},
        {"polytope", polytope_to_json(entry.polytope)},
        {"certificate",
         json{{"sigma_max", entry.cert.sigma_max},
              {"sigma_second", entry.cert.sigma_second},
              {"sigma_min", entry.cert.sigma_min}}},
        {"unresolved", entry.unresolved},
    });
  }
  return json{
      {"schema", kSchemaVersion},
      {"factors", factors},
      {"monomial", json::array({report.monomial[0], report.monomial[1]})},
      {"residual", report.residual},
      {"complete", report.complete},
      {"irreducible", report.irreducible},
      {"stats",
       json{{"vanishing_tests", report.vanishing_tests},
            {"reconstruction_backtracks", report.reconstruction_backtracks},
            {"branch_count", report.branch_count},
            {"m_count", report.m_count}}},
  };
}

}  // namespace absfact
