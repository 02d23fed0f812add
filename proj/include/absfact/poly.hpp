#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "absfact/geometry.hpp"
#include "absfact/vec2.hpp"

namespace absfact {

using Complex = std::complex<double>;

// Sparse bivariate polynomial over C: exponent pair -> coefficient. Stored
// coefficients are never exactly zero.
struct SparsePoly {
  std::map<Vec2, Complex> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  Complex constant_term() const {
    auto it = terms.find(Vec2{0, 0});
    return it == terms.end() ? Complex(0.0) : it->second;
  }
  double max_magnitude() const;
  void set(Vec2 m, Complex c);

  bool operator==(const SparsePoly& other) const = default;
};

// Monomial change of coordinates: m -> matrix * (m - shift). |det| = 1.
struct UnimodularChange {
  std::array<std::array<std::int64_t, 2>, 2> matrix{{{1, 0}, {0, 1}}};
  Vec2 shift{0, 0};

  bool is_identity() const;
  Vec2 apply(Vec2 m) const;
  Vec2 apply_inverse(Vec2 m) const;
};

// Grammar: variables x,y; integer/decimal/complex literals with i;
// operators + - * ^ and parentheses; exponents are nonnegative integers.
// Rejects the zero polynomial.
SparsePoly parse(const std::string& text);

// Inverse of parse up to term order; parse(print(f)) == f.
std::string print(const SparsePoly& f);

LatticePolytope newton_polytope(const SparsePoly& f);

// Translate a vertex to the origin and straighten its cone into the first
// quadrant, so the result has a nonzero constant term and support in N^2.
// Identity when f already qualifies.
std::pair<SparsePoly, UnimodularChange> normalize_support(const SparsePoly& f);

SparsePoly apply_change(const SparsePoly& f, const UnimodularChange& change);
SparsePoly apply_change_inverse(const SparsePoly& f, const UnimodularChange& change);

SparsePoly multiply(const SparsePoly& f, const SparsePoly& g);

// Coefficients c_m for m on the facet, listed along the facet's primitive
// direction, index 0..lattice_length. Absent lattice points give zeros.
std::vector<Complex> facet_polynomial(const SparsePoly& f, const Facet& facet);

Complex evaluate(const SparsePoly& f, Complex t1, Complex t2);

}  // namespace absfact
