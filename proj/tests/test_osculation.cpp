#include <doctest.h>

#include <cstring>
#include <numeric>
#include <random>

#include "absfact/branches.hpp"
#include "absfact/osculation.hpp"
#include "absfact/poly.hpp"

using namespace absfact;

namespace {

struct Setup {
  SparsePoly f;
  LatticePolytope newton;
  Fan fan;
  DivisorData ddata;
  std::vector<Branch> branches;
  ResidueTable table;
};

Setup build(const std::string& text, std::int64_t extra_order = 0) {
  Setup s;
  s.f = parse(text);
  s.newton = newton_polytope(s.f);
  s.fan = regularize(build_fan(s.newton));
  s.ddata = divisor_multiplicities(s.newton, s.fan);
  s.branches = compute_branches(s.f, s.fan, s.ddata, 1e-7, extra_order);
  s.table = build_residue_table(s.branches, interior_lattice_points(s.newton), s.fan);
  return s;
}

SparsePoly random_dense(std::mt19937_64& rng, std::int64_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SparsePoly f;
  for (std::int64_t a = 0; a <= degree; ++a) {
    for (std::int64_t b = 0; a + b <= degree; ++b) {
      Complex c;
      do {
        c = Complex(u(rng), u(rng));
      } while (std::abs(c) > 1.0 || std::abs(c) < 0.05);
      f.set(Vec2{a, b}, c);
    }
  }
  f.set(Vec2{0, 0}, 1.0);
  f.set(Vec2{degree, 0}, 0.5 * f.terms.at(Vec2{degree, 0}) + Complex(1.0));
  f.set(Vec2{0, degree}, 0.5 * f.terms.at(Vec2{0, degree}) + Complex(1.0));
  return f;
}

}  // namespace

TEST_CASE("full branch selection always sums to zero") {
  for (const char* text : {"(1+x+y)*(1+x*y)", "1+x+y+x*y^2+x^2*y",
                           "(1+2*x+3*y)*(1+x+5*x*y)"}) {
    auto s = build(text);
    std::vector<std::size_t> all(s.branches.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> ms(s.table.m_points.size());
    std::iota(ms.begin(), ms.end(), 0);
    auto result = vanishing_test(all, s.table, ms, 1e-8);
    CHECK(result.pass);
  }
}

TEST_CASE("factor selections vanish, mixed selections do not") {
  auto s = build("(1+x+y)*(1+x*y)");
  REQUIRE(s.branches.size() == 3);
  REQUIRE(s.table.m_points == std::vector<Vec2>{{1, 1}, {1, 2}, {2, 1}});

  // branches: ray 1 = (-1,1), ray 3 = (-1,-1), ray 5 = (1,-1).
  // The diagonal factor 1+xy vanishes on rays (-1,1) and (1,-1); the
  // triangle 1+x+y vanishes on ray (-1,-1).
  std::size_t p_left = 0, p_diag = 0, p_right = 0;
  for (std::size_t p = 0; p < 3; ++p) {
    if (s.branches[p].ray_index == 1) p_left = p;
    if (s.branches[p].ray_index == 3) p_diag = p;
    if (s.branches[p].ray_index == 5) p_right = p;
  }
  std::vector<std::size_t> ms{0, 1, 2};
  CHECK(vanishing_test({p_left, p_right}, s.table, ms, 1e-9).pass);
  CHECK(vanishing_test({p_diag}, s.table, ms, 1e-9).pass);
  CHECK_FALSE(vanishing_test({p_left}, s.table, ms, 1e-9).pass);
  CHECK_FALSE(vanishing_test({p_left, p_diag}, s.table, ms, 1e-9).pass);
}

TEST_CASE("random combination test agrees with the deterministic one") {
  auto s = build("(1+x+y)*(1+2*x*y)");
  std::vector<std::size_t> ms(s.table.m_points.size());
  std::iota(ms.begin(), ms.end(), 0);
  for (std::size_t p = 0; p < s.branches.size(); ++p) {
    for (std::size_t q = p; q < s.branches.size(); ++q) {
      std::vector<std::size_t> sel;
      sel.push_back(p);
      if (q != p) sel.push_back(q);
      bool det_pass = vanishing_test(sel, s.table, ms, 1e-9).pass;
      bool prob_pass = random_combination_test(sel, s.table, ms, 1e-9, 42);
      CHECK(det_pass == prob_pass);
    }
  }
}

TEST_CASE("reiss relation on random dense curves") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_dense(rng, 4);
    auto newton = newton_polytope(f);
    auto fan = regularize(build_fan(newton));
    auto ddata = divisor_multiplicities(newton, fan);
    auto branches = compute_branches(f, fan, ddata, 1e-7);
    std::vector<Complex> second;
    for (auto& b : branches) second.push_back(2.0 * b.phi.at(2));
    CHECK(reiss_check(second) <= 1e-8);

    // perturbing one series breaks the relation
    second[0] += Complex(1e-3, 0.0);
    CHECK(reiss_check(second) > 1e-5);
  }
}

TEST_CASE("wood criteria on random dense curves") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_dense(rng, 4);
    auto newton = newton_polytope(f);
    auto fan = regularize(build_fan(newton));
    auto ddata = divisor_multiplicities(newton, fan);
    auto branches = compute_branches(f, fan, ddata, 1e-7);
    std::vector<TruncatedSeries> phis;
    for (auto& b : branches) phis.push_back(b.phi);
    for (double d : wood_check(phis, 4)) CHECK(d <= 1e-7);

    phis[0].coeffs[2] += Complex(1e-3, 0.0);
    double worst = 0.0;
    for (double d : wood_check(phis, 4)) worst = std::max(worst, d);
    CHECK(worst >= 1e-4);
  }
}

TEST_CASE("residues are local in the series truncation") {
  for (const char* text : {"(1+x+y)*(1+x*y)", "(1+2*x+3*y)*(1+x+5*x*y)"}) {
    auto base = build(text);
    auto extended = build(text, 5);
    REQUIRE(base.branches.size() == extended.branches.size());
    for (std::size_t p = 0; p < base.branches.size(); ++p) {
      for (std::size_t mi = 0; mi < base.table.m_points.size(); ++mi) {
        Complex a = base.table.values[p][mi];
        Complex b = extended.table.values[p][mi];
        CHECK(std::memcmp(&a, &b, sizeof(Complex)) == 0);
      }
    }
  }
}
