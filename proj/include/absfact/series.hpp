#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace absfact {

// Truncated power series over C: coefficients c_0..c_K, order K. Arithmetic
// never reads beyond the stated order; every coefficient of a result is a
// fixed-order sum over lower-index inputs, so extending an operand with
// higher coefficients leaves lower result coefficients bit-identical.
struct TruncatedSeries {
  std::vector<std::complex<double>> coeffs;

  static TruncatedSeries constant(std::complex<double> c, std::size_t order);

  std::size_t order() const { return coeffs.size() - 1; }
  std::complex<double> at(std::size_t j) const {
    return j < coeffs.size() ? coeffs[j] : std::complex<double>(0.0);
  }
  TruncatedSeries truncated(std::size_t order) const;
  double max_magnitude() const;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(std::complex<double> c, const TruncatedSeries& a);

// Requires nonzero constant term.
TruncatedSeries inverse(const TruncatedSeries& a);

// Integer powers; negative exponents go through inverse (no branch cuts).
TruncatedSeries int_pow(const TruncatedSeries& a, std::int64_t v);

// Termwise integral of a'/a with constant term Log(c_0) (principal value).
// Requires nonzero constant term.
TruncatedSeries log(const TruncatedSeries& a);

TruncatedSeries derivative(const TruncatedSeries& a);

}  // namespace absfact
