#include <CLI11.hpp>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "absfact/branches.hpp"
#include "absfact/errors.hpp"
#include "absfact/osculation.hpp"
#include "absfact/pipeline.hpp"
#include "absfact/recombination.hpp"
#include "absfact/report.hpp"

namespace {

using namespace absfact;
using nlohmann::json;

struct CliOptions {
  Config config;
  bool json_output = false;
  std::string input;
};

// Random dense polynomial of the given total degree, unit-disc coefficients,
// constant term 1, used by the selftest suites.
SparsePoly random_dense(std::uint64_t seed, std::int64_t degree) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  SparsePoly f;
  for (std::int64_t a = 0; a <= degree; ++a) {
    for (std::int64_t b = 0; a + b <= degree; ++b) {
      Complex c;
      do {
        c = Complex(unit(rng), unit(rng));
      } while (std::abs(c) > 1.0 || std::abs(c) < 0.05);
      f.set(Vec2{a, b}, c);
    }
  }
  f.set(Vec2{0, 0}, 1.0);
  // keep the corner coefficients comfortably away from zero
  f.set(Vec2{degree, 0}, 0.5 * f.terms.at(Vec2{degree, 0}) + Complex(1.0));
  f.set(Vec2{0, degree}, 0.5 * f.terms.at(Vec2{0, degree}) + Complex(1.0));
  return f;
}

void print_factor_text(const FactorReport& report) {
  if (report.monomial != Vec2{0, 0}) {
    std::printf("monomial: x^%lld * y^%lld\n",
                static_cast<long long>(report.monomial[0]),
                static_cast<long long>(report.monomial[1]));
  }
  for (std::size_t j = 0; j < report.factors.size(); ++j) {
    const auto& entry = report.factors[j];
    std::printf("factor %zu%s: %s\n", j + 1, entry.unresolved ? " (unresolved)" : "",
                print(entry.poly).c_str());
  }
  std::printf("residual: %.3e\n", report.residual);
  std::printf("irreducible: %s\n", report.irreducible ? "yes" : "no");
  std::printf("stats: branches=%lld vanishing_tests=%lld backtracks=%lld\n",
              static_cast<long long>(report.branch_count),
              static_cast<long long>(report.vanishing_tests),
              static_cast<long long>(report.reconstruction_backtracks));
}

int cmd_factor(const CliOptions& opt) {
  FactorReport report = factorize(parse(opt.input), opt.config);
  if (opt.json_output) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    print_factor_text(report);
  }
  return report.complete ? 0 : 1;
}

int cmd_polytope(const CliOptions& opt) {
  LatticePolytope P = newton_polytope(parse(opt.input));
  json out = polytope_to_json(P);
  out["schema"] = kSchemaVersion;
  out["volume2"] = volume2(P);
  if (opt.json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& v : P.vertices) {
      std::printf("(%lld, %lld)\n", static_cast<long long>(v[0]),
                  static_cast<long long>(v[1]));
    }
    std::printf("volume2: %lld\n", static_cast<long long>(volume2(P)));
  }
  return 0;
}

int cmd_fan(const CliOptions& opt) {
  auto [fn, change] = normalize_support(parse(opt.input));
  Fan fan = regularize(build_fan(newton_polytope(fn)));
  json out = fan_to_json(fan);
  out["schema"] = kSchemaVersion;
  if (opt.json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < fan.size(); ++i) {
      std::printf("(%lld, %lld)%s\n", static_cast<long long>(fan.rays[i][0]),
                  static_cast<long long>(fan.rays[i][1]),
                  fan.exterior_mask[i] ? " exterior" : "");
    }
  }
  return 0;
}

int cmd_summands(const CliOptions& opt) {
  auto [fn, change] = normalize_support(parse(opt.input));
  auto summands = minkowski_summands(newton_polytope(fn));
  json list = json::array();
  for (auto& Q : summands) list.push_back(polytope_to_json(Q));
  json out{{"schema", kSchemaVersion}, {"summands", list}};
  if (opt.json_output) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& Q : summands) {
      std::string line;
      for (auto& v : Q.vertices) {
        line += "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ") ";
      }
      std::printf("%s\n", line.c_str());
    }
  }
  return 0;
}

int cmd_count(const CliOptions& opt) {
  auto [fn, change] = normalize_support(parse(opt.input));
  LatticePolytope P = newton_polytope(fn);
  std::int64_t degree = 0;
  for (auto& [m, c] : fn.terms) degree = std::max(degree, m[0] + m[1]);
  std::int64_t n = recombination_count(P);
  std::int64_t m = dense_count(degree);
  std::int64_t s = static_cast<std::int64_t>(minkowski_summands(P).size());
  if (opt.json_output) {
    json out{{"schema", kSchemaVersion},
             {"sparse_count", n},
             {"dense_count", m},
             {"summand_count", s}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("sparse selections N: %lld\n", static_cast<long long>(n));
    std::printf("dense selections M: %lld\n", static_cast<long long>(m));
    std::printf("summands: %lld\n", static_cast<long long>(s));
  }
  return 0;
}

int cmd_selftest(const CliOptions& opt) {
  double worst_reiss = 0.0;
  double worst_wood = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    SparsePoly f = random_dense(opt.config.seed + s, 4);
    LatticePolytope newton = newton_polytope(f);
    Fan fan = regularize(build_fan(newton));
    DivisorData ddata = divisor_multiplicities(newton, fan);
    auto branches = compute_branches(f, fan, ddata, opt.config.tol_separation);
    std::vector<Complex> second;
    std::vector<TruncatedSeries> phis;
    for (auto& b : branches) {
      second.push_back(2.0 * b.phi.at(2));
      phis.push_back(b.phi);
    }
    worst_reiss = std::max(worst_reiss, reiss_check(second));
    for (double d : wood_check(phis, 4)) worst_wood = std::max(worst_wood, d);
  }
  if (opt.json_output) {
    json out{{"schema", kSchemaVersion},
             {"reiss_max_deviation", worst_reiss},
             {"wood_max_deviation", worst_wood}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("reiss max deviation: %.3e\n", worst_reiss);
    std::printf("wood max deviation: %.3e\n", worst_wood);
  }
  return (worst_reiss <= 1e-7 && worst_wood <= 1e-6) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"absolute factorization of sparse bivariate polynomials"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--eps", opt.config.eps, "residue vanishing tolerance");
  app.add_option("--tol-separation", opt.config.tol_separation,
                 "facet root separation tolerance");
  app.add_option("--tol-solve", opt.config.tol_solve, "null space tolerance");
  app.add_option("--precision", opt.config.precision, "arithmetic precision");
  app.add_option("--seed", opt.config.seed, "random seed");
  app.add_option("--max-candidates", opt.config.max_candidates,
                 "selection test budget");
  app.add_flag("--probabilistic", opt.config.probabilistic,
               "test one random combination of the vanishing conditions");
  app.add_flag("--json", opt.json_output, "structured output");
  app.fallthrough();

  auto* factor = app.add_subcommand("factor", "factor a polynomial over C");
  factor->add_option("input", opt.input, "polynomial in x, y")->required();
  auto* polytope = app.add_subcommand("polytope", "Newton polytope");
  polytope->add_option("input", opt.input, "polynomial in x, y")->required();
  auto* fan = app.add_subcommand("fan", "regularized completion fan");
  fan->add_option("input", opt.input, "polynomial in x, y")->required();
  auto* summands = app.add_subcommand("summands", "Minkowski summands of the polytope");
  summands->add_option("input", opt.input, "polynomial in x, y")->required();
  auto* count = app.add_subcommand("count", "recombination counts");
  count->add_option("input", opt.input, "polynomial in x, y")->required();
  auto* selftest = app.add_subcommand("selftest", "branch residue identity suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(factor)) return cmd_factor(opt);
    if (app.got_subcommand(polytope)) return cmd_polytope(opt);
    if (app.got_subcommand(fan)) return cmd_fan(opt);
    if (app.got_subcommand(summands)) return cmd_summands(opt);
    if (app.got_subcommand(count)) return cmd_count(opt);
    if (app.got_subcommand(selftest)) return cmd_selftest(opt);
  } catch (const Error& e) {
    if (opt.json_output) {
      std::cout << nlohmann::json{{"schema", absfact::kSchemaVersion},
                                  {"error", e.code()},
                                  {"message", e.what()}}
                       .dump(2)
                << "\n";
    } else {
      std::fprintf(stderr, "error (%s): %s\n", e.code().c_str(), e.what());
    }
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
