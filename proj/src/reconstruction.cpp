#include "absfact/reconstruction.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "absfact/errors.hpp"
#include "absfact/series.hpp"

namespace absfact {

Complex alpha(const Branch& branch, std::int64_t u, std::int64_t v) {
  if (u < 0) return 0.0;
  if (static_cast<std::size_t>(u) > branch.phi.order()) {
    throw InsufficientOrder("alpha: branch series too short");
  }
  if (u > 170) {
    throw PrecisionError("alpha: derivative order exceeds double factorial range");
  }
  double factorial = 1.0;
  for (std::int64_t j = 2; j <= u; ++j) factorial *= static_cast<double>(j);
  TruncatedSeries phi = branch.phi.truncated(static_cast<std::size_t>(u));
  return factorial * int_pow(phi, v).at(static_cast<std::size_t>(u));
}

Complex beta(const Branch& branch, std::int64_t k, Vec2 m,
             const CandidateSummand& cand, const Fan& fan) {
  std::size_t i = branch.ray_index;
  std::int64_t u = k - dot(m, fan.rays[i]) - cand.e[i];
  std::int64_t v = dot(m, fan.rays[i + 1]) + cand.e[i + 1];
  // Taylor-coefficient scaling: the k-th derivative of x^a phi^b carries a
  // column-dependent factor k!/(k-a)!, so the osculation row for order k is
  // the x^u coefficient of phi^v, not the bare u-th derivative.
  if (u < 0) return 0.0;
  if (static_cast<std::size_t>(u) > branch.phi.order()) {
    throw InsufficientOrder("beta: branch series too short");
  }
  TruncatedSeries phi = branch.phi.truncated(static_cast<std::size_t>(u));
  return int_pow(phi, v).at(static_cast<std::size_t>(u));
}

namespace {

std::vector<Vec2> lattice_points(const LatticePolytope& Q) {
  std::int64_t xmax = 0, ymax = 0;
  for (auto& v : Q.vertices) {
    xmax = std::max(xmax, v[0]);
    ymax = std::max(ymax, v[1]);
  }
  std::vector<Vec2> out;
  for (std::int64_t x = 0; x <= xmax; ++x) {
    for (std::int64_t y = 0; y <= ymax; ++y) {
      if (contains_point(Q, Vec2{x, y})) out.push_back(Vec2{x, y});
    }
  }
  return out;
}

}  // namespace

FactorSystem assemble_system(const std::vector<std::size_t>& selection,
                             const CandidateSummand& cand,
                             const std::vector<Branch>& branches, const Fan& fan) {
  FactorSystem system;
  system.columns = lattice_points(cand.Q);
  for (std::size_t p : selection) {
    const Branch& branch = branches[p];
    std::int64_t e_i = cand.e[branch.ray_index];
    for (std::int64_t k = 0; k <= e_i; ++k) {
      std::vector<Complex> row;
      row.reserve(system.columns.size());
      for (auto& m : system.columns) row.push_back(beta(branch, k, m, cand, fan));
      system.rows.push_back(std::move(row));
    }
  }

  // Row count identity: sum_i (e_i+1)|Gamma'_i| = 2 Vol(Q) + deg(Gamma').
  std::int64_t expected = volume2(cand.Q) + static_cast<std::int64_t>(selection.size());
  if (static_cast<std::int64_t>(system.rows.size()) != expected) {
    throw std::logic_error("assemble_system: row count violates the degree identity");
  }
  return system;
}

std::vector<Complex> solve_null(const FactorSystem& system, double tol,
                                SvCertificate* cert) {
  std::size_t cols = system.columns.size();
  if (system.rows.empty()) {
    if (cols == 1) {
      if (cert) *cert = SvCertificate{1.0, 1.0, 0.0};
      return {Complex(1.0)};
    }
    throw Ambiguous("solve_null: empty system with several unknowns");
  }
  Eigen::MatrixXcd A(system.rows.size(), cols);
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) A(r, c) = system.rows[r][c];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  // Pad implicit zero singular values when there are fewer rows than columns.
  std::vector<double> svals(cols, 0.0);
  for (Eigen::Index j = 0; j < sigma.size(); ++j) svals[static_cast<std::size_t>(j)] = sigma(j);
  double sigma_max = svals[0];
  if (sigma_max == 0.0) throw Ambiguous("solve_null: zero system");
  double sigma_min = svals[cols - 1];
  double sigma_second = cols >= 2 ? svals[cols - 2] : sigma_max;
  if (cert) *cert = SvCertificate{sigma_max, sigma_second, sigma_min};
  if (sigma_min > tol * sigma_max) {
    throw NoSolution("solve_null: no one-dimensional null space");
  }
  if (sigma_second <= 10.0 * tol * sigma_max) {
    throw Ambiguous("solve_null: null space dimension exceeds one");
  }
  Eigen::VectorXcd kernel = svd.matrixV().col(cols - 1);
  std::vector<Complex> out(cols);
  for (std::size_t c = 0; c < cols; ++c) out[c] = kernel(c);
  return out;
}

double normalize_and_verify(std::vector<SparsePoly>& factors, const SparsePoly& f,
                            double tol) {
  // Phase gauge: make each constant term real positive where possible.
  for (auto& q : factors) {
    Complex c0 = q.constant_term();
    if (std::abs(c0) > 1e-14 * q.max_magnitude()) {
      Complex phase = c0 / std::abs(c0);
      SparsePoly scaled;
      for (auto& [m, c] : q.terms) scaled.set(m, c / phase);
      q = scaled;
    }
  }

  SparsePoly product;
  product.set(Vec2{0, 0}, 1.0);
  for (auto& q : factors) product = multiply(product, q);

  // Global scale so the product's constant term matches f's; the modulus is
  // spread evenly, the residual phase goes to the first factor.
  Complex target = f.constant_term();
  Complex have = product.constant_term();
  if (have != Complex(0.0) && target != Complex(0.0) && !factors.empty()) {
    Complex ratio = target / have;
    double mod_share = std::pow(std::abs(ratio), 1.0 / static_cast<double>(factors.size()));
    Complex phase = ratio / std::abs(ratio);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      Complex s = mod_share;
      if (j == 0) s *= phase;
      SparsePoly scaled;
      for (auto& [m, c] : factors[j].terms) scaled.set(m, c * s);
      factors[j] = scaled;
    }
    product.terms.clear();
    product.set(Vec2{0, 0}, 1.0);
    for (auto& q : factors) product = multiply(product, q);
  }

  double num = 0.0, den = 0.0;
  SparsePoly diff = f;
  for (auto& [m, c] : product.terms) {
    auto it = diff.terms.find(m);
    diff.set(m, (it == diff.terms.end() ? Complex(0.0) : it->second) - c);
  }
  for (auto& [m, c] : diff.terms) num += std::norm(c);
  for (auto& [m, c] : f.terms) den += std::norm(c);
  double residual = std::sqrt(num / den);
  if (residual > tol) {
    throw VerificationFailed("product of recovered factors deviates from the input (residual " +
                             std::to_string(residual) + ")");
  }
  return residual;
}

}  // namespace absfact
