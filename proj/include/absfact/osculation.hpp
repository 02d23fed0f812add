#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "absfact/branches.hpp"
#include "absfact/geometry.hpp"

namespace absfact {

// Residues <gamma, Psi_m>_p for every branch p and every lattice point m of
// N_f with both coordinates >= 1. Immutable after build.
struct ResidueTable {
  std::vector<Vec2> m_points;
  // values[branch][m index]
  std::vector<std::vector<Complex>> values;
};

// Closed-form residue of the monomial 2-form indexed by m at the branch:
// with a = -<m, eta_i> and b = <m, eta_{i+1}>, the value is the x^a
// coefficient of phi^b / b (log(phi) when b = 0), and 0 when a < 0.
Complex residue(const Branch& branch, Vec2 m, const Fan& fan);

ResidueTable build_residue_table(const std::vector<Branch>& branches,
                                 const std::vector<Vec2>& m_points, const Fan& fan);

struct VanishingResult {
  bool pass;
  double max_deviation;  // worst relative deviation over the m list
};

// True iff for every m the residues of the selected branches sum to zero
// within eps (relative to the sum of magnitudes, with an absolute floor).
VanishingResult vanishing_test(const std::vector<std::size_t>& selection,
                               const ResidueTable& table,
                               const std::vector<std::size_t>& m_indices, double eps,
                               double abs_floor = 1e-12);

// Probability-one variant: tests one seeded random linear combination of the
// m conditions instead of each one separately.
bool random_combination_test(const std::vector<std::size_t>& selection,
                             const ResidueTable& table,
                             const std::vector<std::size_t>& m_indices, double eps,
                             std::uint64_t seed);

// |sum phi_p''(0)| / sum |phi_p''(0)|: the second-derivative relation for
// germs transversal to a line (test oracle).
double reiss_check(const std::vector<Complex>& second_derivs);

// Deviations of the order-(m1+m2) derivative of sum phi_p^{m1}/m1 at 0, for
// all m in (N*)^2 with m1+m2 <= k (dense boundary-line configuration).
std::vector<double> wood_check(const std::vector<TruncatedSeries>& phis,
                               std::int64_t k);

}  // namespace absfact
