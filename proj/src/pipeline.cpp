#include "absfact/pipeline.hpp"

#include <algorithm>
#include <limits>

#include "absfact/branches.hpp"
#include "absfact/errors.hpp"
#include "absfact/osculation.hpp"

namespace absfact {

namespace {

// Shift exponents so both componentwise minima are zero; returns the shift.
Vec2 anchor_exponents(SparsePoly& f) {
  Vec2 low{std::numeric_limits<std::int64_t>::max(),
           std::numeric_limits<std::int64_t>::max()};
  for (auto& [m, c] : f.terms) {
    low[0] = std::min(low[0], m[0]);
    low[1] = std::min(low[1], m[1]);
  }
  if (low == Vec2{0, 0}) return low;
  SparsePoly shifted;
  for (auto& [m, c] : f.terms) shifted.set(sub(m, low), c);
  f = std::move(shifted);
  return low;
}

}  // namespace

FactorReport factorize(const SparsePoly& f, const Config& config) {
  if (config.precision != "double") {
    throw PrecisionError("unsupported precision: " + config.precision);
  }
  if (f.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");

  FactorReport report;
  if (f.is_monomial()) {
    auto& [m, c] = *f.terms.begin();
    report.monomial = m;
    SparsePoly unit;
    unit.set(Vec2{0, 0}, c);
    report.factors.push_back(FactorEntry{unit, LatticePolytope{{Vec2{0, 0}}},
                                         SvCertificate{1.0, 1.0, 0.0}, false});
    report.irreducible = false;
    return report;
  }

  auto [fn, change] = normalize_support(f);
  LatticePolytope newton = newton_polytope(fn);
  Fan fan = regularize(build_fan(newton));
  DivisorData ddata = divisor_multiplicities(newton, fan);
  std::vector<Branch> branches = compute_branches(fn, fan, ddata, config.tol_separation);
  std::vector<Vec2> m_points = interior_lattice_points(newton);
  ResidueTable table = build_residue_table(branches, m_points, fan);

  SearchConfig sc;
  sc.eps = config.eps;
  sc.tol_solve = config.tol_solve;
  sc.probabilistic = config.probabilistic;
  sc.seed = config.seed;
  sc.max_candidates = config.max_candidates;
  SearchResult search = factor_search(newton, fan, branches, table, sc);

  report.complete = search.complete;
  report.vanishing_tests = search.vanishing_tests;
  report.reconstruction_backtracks = search.reconstruction_backtracks;
  report.branch_count = static_cast<std::int64_t>(branches.size());
  report.m_count = static_cast<std::int64_t>(m_points.size());

  std::vector<SparsePoly> polys;
  for (auto& factor : search.factors) polys.push_back(factor.poly);
  report.residual = normalize_and_verify(polys, fn, config.tol_verify);

  for (std::size_t j = 0; j < polys.size(); ++j) {
    SparsePoly mapped = apply_change_inverse(polys[j], change);
    anchor_exponents(mapped);
    const auto& ex = search.factors[j];
    report.factors.push_back(
        FactorEntry{std::move(mapped), LatticePolytope{},
                    SvCertificate{ex.sigma_max, ex.sigma_second, ex.sigma_min},
                    ex.unresolved});
    report.factors.back().polytope = newton_polytope(report.factors.back().poly);
  }

  // The anchored factors multiply to f up to a pure monomial: its exponent is
  // the componentwise minimum of f's support.
  Vec2 low{std::numeric_limits<std::int64_t>::max(),
           std::numeric_limits<std::int64_t>::max()};
  for (auto& [m, c] : f.terms) {
    low[0] = std::min(low[0], m[0]);
    low[1] = std::min(low[1], m[1]);
  }
  report.monomial = low;

  report.irreducible = report.complete && report.factors.size() == 1 &&
                       !report.factors.front().unresolved;
  return report;
}

}  // namespace absfact
