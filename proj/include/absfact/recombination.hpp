#pragma once

#include <cstdint>
#include <vector>

#include "absfact/branches.hpp"
#include "absfact/geometry.hpp"
#include "absfact/osculation.hpp"
#include "absfact/poly.hpp"
#include "absfact/recombination_types.hpp"

namespace absfact {

CandidateSummand degree_targets(const LatticePolytope& Q, const Fan& fan);

// Lexicographic per-ray subsets, cartesian product across rays; the total
// number of selections is the product of the per-ray binomials.
class SelectionEnumerator {
 public:
  // available: per fan ray, sorted branch indices still unassigned.
  SelectionEnumerator(const std::vector<std::vector<std::size_t>>& available,
                      const CandidateSummand& cand);

  bool feasible() const { return feasible_; }
  // Writes the next selection (sorted global branch indices) and returns
  // true, or returns false when exhausted.
  bool next(std::vector<std::size_t>& out);

 private:
  bool feasible_ = true;
  bool done_ = false;
  std::vector<std::vector<std::vector<std::size_t>>> per_ray_choices_;
  std::vector<std::size_t> odometer_;
};

struct SearchConfig {
  double eps = 1e-9;             // relative vanishing threshold
  double abs_floor = 1e-12;      // absolute floor under the relative test
  double tol_solve = 1e-8;
  bool probabilistic = false;
  std::uint64_t seed = 0;
  std::int64_t max_candidates = 1 << 20;
  std::int64_t summand_cap = 64;
};

struct ExtractedFactor {
  LatticePolytope Q;
  std::vector<std::size_t> selection;  // branch indices
  SparsePoly poly;                     // coefficients on Q's lattice points
  double sigma_max = 0.0;
  double sigma_second = 0.0;
  double sigma_min = 0.0;
  bool unresolved = false;  // cofactor emitted after the budget ran out
};

struct SearchResult {
  std::vector<ExtractedFactor> factors;
  bool complete = true;  // false when the candidate budget ran out
  std::int64_t vanishing_tests = 0;
  std::int64_t reconstruction_backtracks = 0;
};

// Theorem-2-constrained recombination: visit candidate summands of the
// remaining polytope in ascending (volume, branch total, vertex) order, test
// each untested selection, and extract-and-recurse on success. The remaining
// full selection closes the search without a test.
SearchResult factor_search(const LatticePolytope& newton, const Fan& fan,
                           const std::vector<Branch>& branches,
                           const ResidueTable& table, const SearchConfig& config);

// Maximal number of selections the search can visit given the polytope
// constraints: sum over proper divisors k of the maximal n with P = n*Q0 of
// the product of C(n*l_i, k*l_i) over Q0's exterior facet lattice lengths.
// An indecomposable polytope reports 2 (the trivial and full selections).
std::int64_t recombination_count(const LatticePolytope& P);

// Dense-polynomial analogue for degree d: sum over proper divisors k of d of
// C(d, k).
std::int64_t dense_count(std::int64_t d);

}  // namespace absfact
