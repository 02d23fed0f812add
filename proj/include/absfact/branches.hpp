#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "absfact/geometry.hpp"
#include "absfact/poly.hpp"
#include "absfact/series.hpp"

namespace absfact {

// Equation of the curve in the affine chart of cone (eta_i, eta_{i+1}):
// term exponents are (<m,eta_i> + k_i, <m,eta_{i+1}> + k_{i+1}), all >= 0.
// Restriction to x = 0 recovers the facet polynomial of ray i.
struct ChartEquation {
  std::map<Vec2, Complex> terms;
};

// A point p of the curve on the boundary divisor D_i together with the
// lifted implicit function y = phi(x) of the curve near p; phi(0) = root.
struct Branch {
  std::size_t ray_index;
  Complex root;
  TruncatedSeries phi;
};

ChartEquation chart_equation(const SparsePoly& f, const Fan& fan,
                             const DivisorData& ddata, std::size_t ray_index);

// All roots of the univariate polynomial with the given coefficients
// (nonzero at both ends), certified pairwise separated and away from zero.
// Throws H1Violation when the separation certificate fails.
std::vector<Complex> facet_roots(const std::vector<Complex>& coeffs, double tol);

// Newton iteration with order doubling: phi(0) = root,
// eq(x, phi(x)) = 0 mod x^{order+1}. Requires a simple root. Throws
// NewtonStall when the final substitution residual fails to vanish.
TruncatedSeries lift_branch(const ChartEquation& eq, Complex root,
                            std::size_t target_order);

// Evaluate the chart equation at y = phi, truncated to phi's order.
TruncatedSeries substitute(const ChartEquation& eq, const TruncatedSeries& phi);

// Lift every branch of f on every exterior ray, to order k_i + extra_order,
// in canonical order (ray index, then root argument, then magnitude).
std::vector<Branch> compute_branches(const SparsePoly& f, const Fan& fan,
                                     const DivisorData& ddata, double tol_sep,
                                     std::int64_t extra_order = 0);

}  // namespace absfact
