#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "absfact/poly.hpp"
#include "absfact/recombination.hpp"
#include "absfact/reconstruction.hpp"

namespace absfact {

struct Config {
  double eps = 1e-9;             // residue vanishing tolerance
  double tol_separation = 1e-7;  // facet root separation certificate
  double tol_solve = 1e-8;       // null space singular value gap
  double tol_verify = 1e-6;      // product-vs-input residual bound
  std::string precision = "double";
  std::uint64_t seed = 0;
  std::int64_t max_candidates = 1 << 20;
  bool probabilistic = false;
};

struct FactorEntry {
  SparsePoly poly;  // original coordinates, exponent-anchored to N^2
  LatticePolytope polytope;
  SvCertificate cert;
  bool unresolved = false;
};

struct FactorReport {
  std::vector<FactorEntry> factors;
  Vec2 monomial{0, 0};  // content t1^a t2^b split off the input
  double residual = 0.0;
  bool complete = true;
  bool irreducible = false;
  std::int64_t vanishing_tests = 0;
  std::int64_t reconstruction_backtracks = 0;
  std::int64_t branch_count = 0;
  std::int64_t m_count = 0;
};

// Full run: normalize support, build the regularized fan, lift branches,
// tabulate residues, search-and-extract factors, verify the product, and map
// everything back to the input coordinates.
FactorReport factorize(const SparsePoly& f, const Config& config);

}  // namespace absfact
