#pragma once

// Topological zeta functions as exact power series, the kneading determinant
// D(z) = 1 + Σ ε_k z^k, periodic-orbit counts, the product
// Ξ(z) = ∏_{n>=0} (1 - z^{2^n}) and certified topological entropy.

#include <complex>
#include <optional>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneading/dyadic.hpp"
#include "kneading/series.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

/// D(z) truncated at order N. A purely periodic K with digit period n gives
/// the polynomial 1 + Σ_{k<n} ε_k z^k; any other K gives 1 + Σ_{k<=N} ε_k z^k.
IntSeries kneading_determinant(const SymbolStream& K, std::size_t N);

/// True when kneading_determinant(K, ·) is a finite polynomial (K purely periodic).
bool kneading_determinant_is_polynomial(const SymbolStream& K);

/// ζ(z) = 1 / ((1 - z) D(z)) to order N.
IntSeries zeta_series(const SymbolStream& K, std::size_t N);

struct OrbitCounts {
  /// per_counts[n] = #Per_n for 1 <= n <= order; index 0 unused.
  std::vector<Integer> per_counts;
  /// prime_counts[p] = number of periodic orbits of least period p.
  std::vector<Integer> prime_counts;

  std::size_t order() const { return per_counts.empty() ? 0 : per_counts.size() - 1; }
};

/// #Per_n = n [z^n] log ζ and N(p) = (1/p) Σ_{d|p} μ(d) #Per_{p/d}.
/// Throws std::domain_error if a count is not a nonnegative integer.
OrbitCounts orbit_counts(const IntSeries& zeta);

/// ∏_{p<=N} (1 - z^p)^{-N(p)} truncated at the order of the counts.
IntSeries euler_product(const OrbitCounts& counts);

/// Möbius function.
int moebius(std::uint64_t n);

/// ∏_{n : 2^n <= N} (1 - z^{2^n}) to order N.
IntSeries xi_series(std::size_t N);

/// Ξ(z) - (1 - z) Ξ(z^2) to order N (identically zero).
IntSeries xi_functional_residual(std::size_t N);

/// 1 - ½ Ξ(½) from the order-N partial sum with tail bound 2^{-N}.
DyadicEnclosure xi_half_enclosure(std::size_t N);

/// (1 - z) ∏_{n=0}^{j} (1 - z^{2^n}) to order N.
IntSeries feigenbaum_zeta_denominator(unsigned j, std::size_t N);
/// Reciprocal of feigenbaum_zeta_denominator.
IntSeries feigenbaum_zeta(unsigned j, std::size_t N);

/// Raised when the truncation order is too small to decide the sign pattern of D.
class EntropyInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EntropyCertificate {
  std::size_t order = 0;
  bool polynomial = false;
  /// Power of (1 - z) divided out of a polynomial D before the search.
  std::size_t unit_root_multiplicity = 0;
  /// D > 0 on [0, positive_up_to] (interval lower bounds incl. tail).
  Rational positive_up_to;
  /// Breakpoints 0 < x_1 < … < x_m = positive_up_to; D > 0 is certified on
  /// each [x_{i-1}, x_i] separately.
  std::vector<Rational> positive_cover;
  /// D(negative_at) + tail < 0; absent when no sign change was found.
  std::optional<Rational> negative_at;
  /// Upper bound on D at negative_at.
  Rational negative_value_bound;
  std::size_t interval_checks = 0;
  /// Polynomial case: Descartes' rule after z = 1/(1+x) shows no root in (0,1).
  bool descartes_no_unit_root = false;
};

struct EntropyResult {
  enum class Status {
    Positive,       ///< h in [lo, hi], a root z* of D isolated in (0,1)
    Zero,           ///< D is a polynomial with no root in [0,1): h = 0 exactly
    BelowBound      ///< no root of D in (0, r]: 0 <= h <= -log r
  };
  Status status = Status::Zero;
  double lo = 0.0;
  double hi = 0.0;
  Rational z_lo;  ///< z* in [z_lo, z_hi] for Positive
  Rational z_hi;
  EntropyCertificate certificate;
};

std::string to_string(EntropyResult::Status s);

/// Topological entropy h = -log z*, z* the smallest zero of D in (0,1).
/// `tolerance` bounds hi - lo. A polynomial D is used in full even when its
/// degree exceeds N. For non-polynomial D with no zero found,
/// positivity is certified up to 1 - zero_margin. Throws EntropyInconclusive
/// when the truncation cannot decide.
EntropyResult entropy(const SymbolStream& K, std::size_t N, double tolerance, double zero_margin = 1.0 / 16);

/// Sign variations of (1+x)^n P(1/(1+x)), which bound the number of roots of
/// P in (0,1) and share its parity.
std::size_t descartes_unit_variations(const std::vector<Integer>& ascending);

/// Re-checks the sign facts recorded in the certificate against D.
bool verify_entropy_certificate(const SymbolStream& K, const EntropyResult& result);

/// Roots of Σ c_k z^k (ascending coefficients, nonzero leading term) by the
/// Aberth–Ehrlich iteration.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

/// Roots of ∏_{n=0}^{j} (1 - z^{2^n}) found factor by factor (2^{j+1} - 1 values).
std::vector<std::complex<double>> xi_partial_product_roots(unsigned j);

/// Roots of (1 - z) ∏_{n=0}^{j} (1 - z^{2^n}) (2^{j+1} values).
std::vector<std::complex<double>> feigenbaum_zeta_roots(unsigned j);

}  // namespace kneading
