#include "absfact/osculation.hpp"

#include <cmath>
#include <random>

#include "absfact/errors.hpp"
#include "absfact/series.hpp"

namespace absfact {

Complex residue(const Branch& branch, Vec2 m, const Fan& fan) {
  Vec2 eta_i = fan.rays[branch.ray_index];
  Vec2 eta_next = fan.rays[branch.ray_index + 1];
  std::int64_t a = -dot(m, eta_i);
  std::int64_t b = dot(m, eta_next);
  if (a < 0) return 0.0;  // the form is holomorphic at the branch point
  if (static_cast<std::size_t>(a) > branch.phi.order()) {
    throw InsufficientOrder("residue: branch series too short");
  }
  // Truncate first: the value depends on phi modulo x^{a+1} only.
  TruncatedSeries phi = branch.phi.truncated(static_cast<std::size_t>(a));
  if (b == 0) return log(phi).at(static_cast<std::size_t>(a));
  return int_pow(phi, b).at(static_cast<std::size_t>(a)) / static_cast<double>(b);
}

ResidueTable build_residue_table(const std::vector<Branch>& branches,
                                 const std::vector<Vec2>& m_points, const Fan& fan) {
  ResidueTable table;
  table.m_points = m_points;
  table.values.resize(branches.size());
  for (std::size_t p = 0; p < branches.size(); ++p) {
    table.values[p].reserve(m_points.size());
    for (auto& m : m_points) table.values[p].push_back(residue(branches[p], m, fan));
  }
  return table;
}

VanishingResult vanishing_test(const std::vector<std::size_t>& selection,
                               const ResidueTable& table,
                               const std::vector<std::size_t>& m_indices, double eps,
                               double abs_floor) {
  VanishingResult result{true, 0.0};
  for (std::size_t mi : m_indices) {
    Complex sum = 0.0;
    double mag = 0.0;
    for (std::size_t p : selection) {
      sum += table.values[p][mi];
      mag += std::abs(table.values[p][mi]);
    }
    double deviation = std::abs(sum) / (mag + abs_floor);
    result.max_deviation = std::max(result.max_deviation, deviation);
    if (std::abs(sum) > eps * mag + abs_floor) result.pass = false;
  }
  return result;
}

bool random_combination_test(const std::vector<std::size_t>& selection,
                             const ResidueTable& table,
                             const std::vector<std::size_t>& m_indices, double eps,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Complex sum = 0.0;
  double mag = 0.0;
  for (std::size_t mi : m_indices) {
    Complex lambda(unit(rng), unit(rng));
    Complex column = 0.0;
    double column_mag = 0.0;
    for (std::size_t p : selection) {
      column += table.values[p][mi];
      column_mag += std::abs(table.values[p][mi]);
    }
    sum += lambda * column;
    mag += std::abs(lambda) * column_mag;
  }
  return std::abs(sum) <= eps * mag + 1e-12;
}

double reiss_check(const std::vector<Complex>& second_derivs) {
  Complex sum = 0.0;
  double mag = 0.0;
  for (auto& d : second_derivs) {
    sum += d;
    mag += std::abs(d);
  }
  return std::abs(sum) / (mag + 1e-12);
}

std::vector<double> wood_check(const std::vector<TruncatedSeries>& phis,
                               std::int64_t k) {
  std::vector<double> deviations;
  for (std::int64_t m1 = 1; m1 < k; ++m1) {
    for (std::int64_t m2 = 1; m1 + m2 <= k; ++m2) {
      std::size_t n = static_cast<std::size_t>(m1 + m2);
      double factorial = 1.0;
      for (std::size_t j = 2; j <= n; ++j) factorial *= static_cast<double>(j);
      Complex sum = 0.0;
      double mag = 0.0;
      for (auto& phi : phis) {
        Complex v = factorial * int_pow(phi.truncated(n), m1).at(n) /
                    static_cast<double>(m1);
        sum += v;
        mag += std::abs(v);
      }
      deviations.push_back(std::abs(sum) / (mag + 1e-12));
    }
  }
  return deviations;
}

}  // namespace absfact
