#include "absfact/series.hpp"

#include <algorithm>
#include <cmath>

#include "absfact/errors.hpp"

namespace absfact {

using Complex = std::complex<double>;

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order) {
  TruncatedSeries s;
  s.coeffs.assign(order + 1, Complex(0.0));
  s.coeffs[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  TruncatedSeries s;
  s.coeffs.assign(order + 1, Complex(0.0));
  for (std::size_t j = 0; j <= order && j < coeffs.size(); ++j) s.coeffs[j] = coeffs[j];
  return s;
}

double TruncatedSeries::max_magnitude() const {
  double m = 0.0;
  for (auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.coeffs.resize(std::min(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] = a.coeffs[j] + b.coeffs[j];
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.coeffs.resize(std::min(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] = a.coeffs[j] - b.coeffs[j];
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.coeffs.assign(std::min(a.coeffs.size(), b.coeffs.size()), Complex(0.0));
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) {
    Complex s = 0.0;
    for (std::size_t l = 0; l <= j; ++l) s += a.at(l) * b.at(j - l);
    out.coeffs[j] = s;
  }
  return out;
}

TruncatedSeries scale(Complex c, const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (auto& v : out.coeffs) v *= c;
  return out;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  if (a.coeffs[0] == Complex(0.0)) {
    throw ZeroConstantTerm("series inverse: zero constant term");
  }
  TruncatedSeries out;
  out.coeffs.assign(a.coeffs.size(), Complex(0.0));
  out.coeffs[0] = Complex(1.0) / a.coeffs[0];
  for (std::size_t j = 1; j < out.coeffs.size(); ++j) {
    Complex s = 0.0;
    for (std::size_t l = 1; l <= j; ++l) s += a.coeffs[l] * out.coeffs[j - l];
    out.coeffs[j] = -s / a.coeffs[0];
  }
  return out;
}

TruncatedSeries int_pow(const TruncatedSeries& a, std::int64_t v) {
  if (v < 0) return int_pow(inverse(a), -v);
  TruncatedSeries out = TruncatedSeries::constant(1.0, a.order());
  TruncatedSeries acc = a;
  std::uint64_t n = static_cast<std::uint64_t>(v);
  while (n) {
    if (n & 1) out = mul(out, acc);
    n >>= 1;
    if (n) acc = mul(acc, acc);
  }
  return out;
}

TruncatedSeries log(const TruncatedSeries& a) {
  if (a.coeffs[0] == Complex(0.0)) {
    throw ZeroConstantTerm("series log: zero constant term");
  }
  // log(a)' = a'/a, integrated termwise.
  TruncatedSeries ratio = mul(derivative(a), inverse(a).truncated(a.order() == 0 ? 0 : a.order() - 1));
  TruncatedSeries out;
  out.coeffs.assign(a.coeffs.size(), Complex(0.0));
  out.coeffs[0] = std::log(a.coeffs[0]);
  for (std::size_t j = 1; j < out.coeffs.size(); ++j) {
    out.coeffs[j] = ratio.at(j - 1) / static_cast<double>(j);
  }
  return out;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  TruncatedSeries out;
  if (a.coeffs.size() <= 1) {
    out.coeffs.assign(1, Complex(0.0));
    return out;
  }
  out.coeffs.resize(a.coeffs.size() - 1);
  for (std::size_t j = 0; j + 1 < a.coeffs.size(); ++j) {
    out.coeffs[j] = static_cast<double>(j + 1) * a.coeffs[j + 1];
  }
  return out;
}

}  // namespace absfact
