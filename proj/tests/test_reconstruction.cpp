#include <doctest.h>

#include <numeric>

#include "absfact/branches.hpp"
#include "absfact/errors.hpp"
#include "absfact/poly.hpp"
#include "absfact/recombination.hpp"
#include "absfact/reconstruction.hpp"

using namespace absfact;

namespace {

bool close(Complex a, Complex b, double tol = 1e-10) { return std::abs(a - b) <= tol; }

struct Setup {
  SparsePoly f;
  LatticePolytope newton;
  Fan fan;
  DivisorData ddata;
  std::vector<Branch> branches;
};

Setup worked() {
  Setup s;
  s.f = parse("(1+x+y)*(1+x*y)");
  s.newton = newton_polytope(s.f);
  s.fan = regularize(build_fan(s.newton));
  s.ddata = divisor_multiplicities(s.newton, s.fan);
  s.branches = compute_branches(s.f, s.fan, s.ddata, 1e-7);
  return s;
}

}  // namespace

TEST_CASE("alpha derivatives of a known series") {
  // phi = 1/(1-x): d^u phi(0) = u!
  Branch b;
  b.ray_index = 0;
  b.phi.coeffs = {1.0, 1.0, 1.0, 1.0, 1.0};
  CHECK(close(alpha(b, 0, 1), 1.0));
  CHECK(close(alpha(b, 3, 1), 6.0));
  CHECK(close(alpha(b, -2, 1), 0.0));
  // phi^2 = sum (j+1) x^j: d^3 = 3! * 4 = 24
  CHECK(close(alpha(b, 3, 2), 24.0));
  CHECK_THROWS_AS(alpha(b, 5, 1), InsufficientOrder);
}

TEST_CASE("system shape follows the degree identity") {
  auto s = worked();
  auto summands = minkowski_summands(canonicalize(s.newton));
  std::vector<std::size_t> all(s.branches.size());
  std::iota(all.begin(), all.end(), 0);

  for (auto& Q : summands) {
    if (Q.is_point()) continue;
    auto cand = degree_targets(Q, s.fan);
    // pick the lex-first selection matching the targets
    std::vector<std::vector<std::size_t>> available(s.fan.size());
    for (std::size_t p = 0; p < s.branches.size(); ++p) {
      available[s.branches[p].ray_index].push_back(p);
    }
    SelectionEnumerator en(available, cand);
    REQUIRE(en.feasible());
    std::vector<std::size_t> sel;
    REQUIRE(en.next(sel));
    auto system = assemble_system(sel, cand, s.branches, s.fan);
    CHECK(static_cast<std::int64_t>(system.rows.size()) ==
          volume2(cand.Q) + static_cast<std::int64_t>(sel.size()));
    std::int64_t pts = 0;
    for (std::int64_t x = 0; x <= 5; ++x) {
      for (std::int64_t y = 0; y <= 5; ++y) {
        if (contains_point(cand.Q, Vec2{x, y})) ++pts;
      }
    }
    CHECK(static_cast<std::int64_t>(system.columns.size()) == pts);
  }
}

TEST_CASE("solve_null on hand matrices") {
  // rank 1, kernel (1,-1)/sqrt(2)
  FactorSystem sys;
  sys.columns = {Vec2{0, 0}, Vec2{1, 0}};
  sys.rows = {{1.0, 1.0}, {2.0, 2.0}};
  auto v = solve_null(sys, 1e-10);
  CHECK(close(v[0] + v[1], 0.0, 1e-12));
  CHECK(close(std::abs(v[0]), 1.0 / std::sqrt(2.0), 1e-12));

  // full rank: no solution
  sys.rows = {{1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(solve_null(sys, 1e-10), NoSolution);

  // rank 0 rows over 2 columns: kernel dimension 2
  sys.rows = {{0.0, 0.0}};
  CHECK_THROWS_AS(solve_null(sys, 1e-10), Ambiguous);

  // underdetermined: 1 row, 3 columns
  sys.columns = {Vec2{0, 0}, Vec2{1, 0}, Vec2{2, 0}};
  sys.rows = {{1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(solve_null(sys, 1e-10), Ambiguous);
}

TEST_CASE("factor recovery from the true selection") {
  auto s = worked();
  // the diagonal segment candidate with the two 1+xy branches
  auto cand = degree_targets(convex_hull({Vec2{0, 0}, Vec2{1, 1}}), s.fan);
  std::vector<std::size_t> sel;
  for (std::size_t p = 0; p < s.branches.size(); ++p) {
    if (s.branches[p].ray_index != 3) sel.push_back(p);
  }
  REQUIRE(sel.size() == 2);
  auto system = assemble_system(sel, cand, s.branches, s.fan);
  SvCertificate cert;
  auto v = solve_null(system, 1e-8, &cert);
  REQUIRE(v.size() == 2);
  // kernel proportional to (1, 1)
  CHECK(close(v[0] / v[1], 1.0, 1e-9));
  CHECK(cert.sigma_min <= 1e-8 * cert.sigma_max);
  CHECK(cert.sigma_second > 1e-4 * cert.sigma_max);
}

TEST_CASE("normalize_and_verify gauges and checks the product") {
  auto f = parse("(1+x+y)*(1+x*y)");
  std::vector<SparsePoly> factors;
  factors.push_back(parse("2i + 2i*x + 2i*y"));   // off by a phase and scale
  factors.push_back(parse("0.5 + 0.5*x*y"));
  double residual = normalize_and_verify(factors, f, 1e-9);
  CHECK(residual <= 1e-12);
  for (auto& q : factors) {
    CHECK(std::abs(q.constant_term().imag()) <= 1e-12);
    CHECK(q.constant_term().real() > 0.0);
  }
  CHECK(close(evaluate(factors[0], 0.3, 0.4) * evaluate(factors[1], 0.3, 0.4),
              evaluate(f, 0.3, 0.4), 1e-9));

  // corrupt one factor: residual surfaces, verification rejects
  factors[0].set(Vec2{1, 0}, factors[0].terms.at(Vec2{1, 0}) + Complex(1e-3));
  CHECK_THROWS_AS(normalize_and_verify(factors, f, 1e-6), VerificationFailed);
}
