#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "absfact/pipeline.hpp"
#include "absfact/recombination.hpp"
#include "absfact/report.hpp"

namespace py = pybind11;
using namespace absfact;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

LatticePolytope polytope_from_vertices(const std::vector<std::array<std::int64_t, 2>>& vs) {
  std::vector<Vec2> pts;
  for (auto& v : vs) pts.push_back(Vec2{v[0], v[1]});
  return convex_hull(std::move(pts));
}

}  // namespace

PYBIND11_MODULE(_absfact, mod) {
  mod.doc() = "absolute factorization of sparse bivariate polynomials";

  mod.def(
      "factor",
      [](const std::string& text, double eps, double tol_separation, double tol_solve,
         std::uint64_t seed, std::int64_t max_candidates, bool probabilistic) {
        Config config;
        config.eps = eps;
        config.tol_separation = tol_separation;
        config.tol_solve = tol_solve;
        config.seed = seed;
        config.max_candidates = max_candidates;
        config.probabilistic = probabilistic;
        return to_py(report_to_json(factorize(parse(text), config)));
      },
      py::arg("text"), py::arg("eps") = 1e-9, py::arg("tol_separation") = 1e-7,
      py::arg("tol_solve") = 1e-8, py::arg("seed") = 0,
      py::arg("max_candidates") = std::int64_t{1} << 20,
      py::arg("probabilistic") = false);

  mod.def("newton_polytope", [](const std::string& text) {
    return to_py(polytope_to_json(newton_polytope(parse(text))));
  });

  mod.def("fan", [](const std::string& text) {
    auto [fn, change] = normalize_support(parse(text));
    return to_py(fan_to_json(regularize(build_fan(newton_polytope(fn)))));
  });

  mod.def("summands", [](const std::string& text) {
    auto [fn, change] = normalize_support(parse(text));
    nlohmann::json list = nlohmann::json::array();
    for (auto& Q : minkowski_summands(newton_polytope(fn))) {
      list.push_back(polytope_to_json(Q));
    }
    return to_py(list);
  });

  mod.def("recombination_count",
          [](const std::vector<std::array<std::int64_t, 2>>& vertices) {
            return recombination_count(polytope_from_vertices(vertices));
          });

  mod.def("dense_count", &dense_count);

  mod.def("roundtrip", [](const std::string& text) { return print(parse(text)); });
}
