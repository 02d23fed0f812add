#include "absfact/branches.hpp"

#include <algorithm>
#include <cmath>

#include "absfact/errors.hpp"

namespace absfact {

ChartEquation chart_equation(const SparsePoly& f, const Fan& fan,
                             const DivisorData& ddata, std::size_t i) {
  ChartEquation eq;
  Vec2 eta_i = fan.rays[i];
  Vec2 eta_next = fan.rays[i + 1];
  for (auto& [m, c] : f.terms) {
    Vec2 e{dot(m, eta_i) + ddata.k[i], dot(m, eta_next) + ddata.k[i + 1]};
    eq.terms[e] += c;
  }
  return eq;
}

std::vector<Complex> facet_roots(const std::vector<Complex>& coeffs, double tol) {
  std::size_t degree = coeffs.size() - 1;
  std::vector<Complex> roots;
  if (degree == 0) return roots;
  if (coeffs.front() == Complex(0.0) || coeffs.back() == Complex(0.0)) {
    throw std::invalid_argument("facet_roots: end coefficients must be nonzero");
  }

  // Monic copy.
  std::vector<Complex> a(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) a[j] = coeffs[j] / coeffs.back();

  double radius = 0.0;
  for (std::size_t j = 0; j < degree; ++j) radius = std::max(radius, std::abs(a[j]));
  radius = 1.0 + radius;

  auto eval = [&](Complex z) {
    Complex v = 1.0;
    for (std::size_t j = degree; j-- > 0;) v = v * z + a[j];
    return v;
  };

  // Durand-Kerner simultaneous iteration from a fixed spiral start.
  roots.resize(degree);
  Complex seed(0.4, 0.9);
  Complex z = 1.0;
  for (std::size_t k = 0; k < degree; ++k) {
    z *= seed;
    roots[k] = radius * z;
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double step = 0.0;
    for (std::size_t k = 0; k < degree; ++k) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != k) denom *= roots[k] - roots[j];
      }
      Complex delta = eval(roots[k]) / denom;
      roots[k] -= delta;
      step = std::max(step, std::abs(delta));
    }
    if (step <= 1e-15 * radius) break;
  }

  double max_mag = 0.0;
  for (auto& r : roots) max_mag = std::max(max_mag, std::abs(r));
  double separation = tol * max_mag;
  for (std::size_t k = 0; k < degree; ++k) {
    if (std::abs(roots[k]) <= separation) {
      throw H1Violation("facet polynomial has a root at the origin");
    }
    for (std::size_t j = k + 1; j < degree; ++j) {
      if (std::abs(roots[k] - roots[j]) <= separation) {
        throw H1Violation("facet polynomial has a repeated root");
      }
    }
  }

  std::sort(roots.begin(), roots.end(), [](Complex lhs, Complex rhs) {
    double arg_l = std::arg(lhs), arg_r = std::arg(rhs);
    if (arg_l != arg_r) return arg_l < arg_r;
    return std::abs(lhs) < std::abs(rhs);
  });
  return roots;
}

namespace {

// Chart equation grouped as a polynomial in y with x-polynomial coefficients.
struct GroupedEquation {
  // a[b][j] = coefficient of x^j y^b.
  std::vector<std::vector<Complex>> a;

  static GroupedEquation from(const ChartEquation& eq) {
    GroupedEquation g;
    for (auto& [e, c] : eq.terms) {
      std::size_t b = static_cast<std::size_t>(e[1]);
      std::size_t j = static_cast<std::size_t>(e[0]);
      if (g.a.size() <= b) g.a.resize(b + 1);
      if (g.a[b].size() <= j) g.a[b].resize(j + 1, Complex(0.0));
      g.a[b][j] += c;
    }
    return g;
  }

  TruncatedSeries coeff_series(std::size_t b, std::size_t order) const {
    TruncatedSeries s = TruncatedSeries::constant(0.0, order);
    if (b < a.size()) {
      for (std::size_t j = 0; j < a[b].size() && j <= order; ++j) s.coeffs[j] = a[b][j];
    }
    return s;
  }

  TruncatedSeries eval(const TruncatedSeries& phi) const {
    std::size_t order = phi.order();
    TruncatedSeries v = TruncatedSeries::constant(0.0, order);
    for (std::size_t b = a.size(); b-- > 0;) {
      v = add(mul(v, phi), coeff_series(b, order));
    }
    return v;
  }

  GroupedEquation d_dy() const {
    GroupedEquation g;
    if (a.size() <= 1) {
      g.a.resize(1);
      return g;
    }
    g.a.resize(a.size() - 1);
    for (std::size_t b = 1; b < a.size(); ++b) {
      g.a[b - 1] = a[b];
      for (auto& c : g.a[b - 1]) c *= static_cast<double>(b);
    }
    return g;
  }
};

}  // namespace

TruncatedSeries substitute(const ChartEquation& eq, const TruncatedSeries& phi) {
  return GroupedEquation::from(eq).eval(phi);
}

TruncatedSeries lift_branch(const ChartEquation& eq, Complex root,
                            std::size_t target_order) {
  GroupedEquation g = GroupedEquation::from(eq);
  GroupedEquation gy = g.d_dy();

  TruncatedSeries probe = TruncatedSeries::constant(root, 0);
  Complex slope = gy.eval(probe).coeffs[0];
  if (slope == Complex(0.0)) {
    throw NewtonStall("lift_branch: vanishing y-derivative at the root");
  }

  TruncatedSeries phi = TruncatedSeries::constant(root, 0);
  std::size_t order = 0;
  while (order < target_order) {
    std::size_t prev = order;
    order = std::min(2 * order + 1, target_order);
    phi = phi.truncated(order);
    TruncatedSeries correction = mul(g.eval(phi), inverse(gy.eval(phi)));
    // The correction vanishes through the already-verified order; zero it
    // there explicitly so a longer lift is a bit-exact extension of a
    // shorter one (the root itself stays as delivered).
    for (std::size_t j = 0; j <= prev; ++j) correction.coeffs[j] = Complex(0.0);
    phi = sub(phi, correction);
  }

  // Verify the lift by substitution.
  TruncatedSeries residual = g.eval(phi);
  double scale = 0.0;
  double mag = std::max(1.0, phi.max_magnitude());
  double power = 1.0;
  for (std::size_t b = 0; b < g.a.size(); ++b) {
    for (auto& c : g.coeff_series(b, target_order).coeffs) {
      scale = std::max(scale, std::abs(c) * power);
    }
    power *= mag;
  }
  if (residual.max_magnitude() > 1e-10 * std::max(scale, 1e-300)) {
    throw NewtonStall("lift_branch: residual failed to contract");
  }
  return phi;
}

std::vector<Branch> compute_branches(const SparsePoly& f, const Fan& fan,
                                     const DivisorData& ddata, double tol_sep,
                                     std::int64_t extra_order) {
  std::vector<Branch> branches;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (!fan.exterior_mask[i]) continue;
    ChartEquation eq = chart_equation(f, fan, ddata, i);

    // Restriction to x = 0: the facet polynomial in the chart coordinate y.
    std::int64_t lo = -1, hi = -1;
    for (auto& [e, c] : eq.terms) {
      if (e[0] != 0) continue;
      if (lo < 0 || e[1] < lo) lo = e[1];
      if (e[1] > hi) hi = e[1];
    }
    std::vector<Complex> restriction(static_cast<std::size_t>(hi - lo) + 1, 0.0);
    for (auto& [e, c] : eq.terms) {
      if (e[0] == 0) restriction[static_cast<std::size_t>(e[1] - lo)] = c;
    }

    std::size_t order = static_cast<std::size_t>(ddata.k[i] + extra_order);
    for (Complex root : facet_roots(restriction, tol_sep)) {
      branches.push_back(Branch{i, root, lift_branch(eq, root, order)});
    }
  }
  return branches;
}

}  // namespace absfact
