#pragma once

#include <vector>

#include "absfact/branches.hpp"
#include "absfact/geometry.hpp"
#include "absfact/poly.hpp"
#include "absfact/recombination_types.hpp"

namespace absfact {

// The homogeneous linear system whose one-dimensional null space carries the
// factor coefficients: one row per (selected branch, derivative order k),
// one column per lattice point of the candidate polytope.
struct FactorSystem {
  std::vector<Vec2> columns;                   // lattice points of Q
  std::vector<std::vector<Complex>> rows;      // dense row-major entries
};

// u-th derivative of phi^v at 0; zero for u < 0.
Complex alpha(const Branch& branch, std::int64_t u, std::int64_t v);

// Osculation row entry for derivative order k at column m: the coefficient
// of x^u in phi^v with u = k - <m,eta_i> - e_i and v = <m,eta_{i+1}> +
// e_{i+1} (coefficient normalization, so the factor's chart equation
// composed with phi vanishes mod x^{e_i+1} iff all rows vanish).
Complex beta(const Branch& branch, std::int64_t k, Vec2 m,
             const CandidateSummand& cand, const Fan& fan);

// Rows sum a_m beta_p(k, m) = 0 over all selected branches p on ray i and
// all 0 <= k <= e_i. Row count equals 2*Vol(Q) + deg(Gamma'), asserted.
FactorSystem assemble_system(const std::vector<std::size_t>& selection,
                             const CandidateSummand& cand,
                             const std::vector<Branch>& branches, const Fan& fan);

struct SvCertificate {
  double sigma_max = 0.0;
  double sigma_second = 0.0;
  double sigma_min = 0.0;
};

// Unit-norm smallest singular direction; accepted only with the
// one-dimensionality certificate sigma_min <= tol*sigma_max and
// sigma_second > 10*tol*sigma_max. Throws NoSolution / Ambiguous.
std::vector<Complex> solve_null(const FactorSystem& system, double tol,
                                SvCertificate* cert = nullptr);

// Gauge-fix the factors (constant terms real positive, global scalar so the
// product's constant term matches f) and return the relative coefficient
// residual of f - prod(factors). Throws VerificationFailed above tol.
double normalize_and_verify(std::vector<SparsePoly>& factors, const SparsePoly& f,
                            double tol);

}  // namespace absfact
