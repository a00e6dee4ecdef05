#pragma once

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N with exact
// coefficients. Arithmetic between two series truncates at the smaller order.

#include <cstddef>
#include <string>
#include <vector>

#include "kneading/rational.hpp"

namespace kneading {

template <typename Coeff>
class Series {
 public:
  Series() : coeffs_(1) {}
  /// Zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Coefficients c_0..c_N; the order is size()-1 (or the given order, zero padded / truncated).
  explicit Series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }
  Series(std::vector<Coeff> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) { coeffs_.resize(order + 1); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Coeff& operator[](std::size_t k) const { return coeffs_[k]; }
  Coeff& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Series truncated(std::size_t order) const { return Series(coeffs_, order); }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    const std::size_t n = r.order();
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b[j] != 0) r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

 private:
  std::vector<Coeff> coeffs_;
};

using IntSeries = Series<Integer>;
using RationalSeries = Series<Rational>;

/// 1/a for a with constant term ±1, exact over the integers.
/// Throws std::domain_error otherwise.
IntSeries reciprocal(const IntSeries& a);

/// Polynomial (1 - z^m) at the given order.
IntSeries one_minus_power(std::size_t m, std::size_t order);

/// Formal logarithm of a series with constant term 1 (rational coefficients).
RationalSeries formal_log(const IntSeries& a);
/// Formal exponential of a series with zero constant term.
RationalSeries formal_exp(const RationalSeries& a);

/// Integer series if every coefficient is integral; throws std::domain_error otherwise.
IntSeries to_integer_series(const RationalSeries& a);
RationalSeries to_rational_series(const IntSeries& a);

/// Σ c_k x^k evaluated exactly.
Rational evaluate(const IntSeries& a, const Rational& x);

/// "1 - z - z^2 + z^3"
std::string to_string(const IntSeries& a);

}  // namespace kneading
