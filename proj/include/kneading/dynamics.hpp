#pragma once

// Concrete unimodal maps in binary64: itineraries with reliability flags,
// kneading sequences, map-level renormalization and numeric checks of the
// symbolic theory. Floating point stays inside this module.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneading/encoding.hpp"
#include "kneading/rational.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

struct UnimodalMap {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> derivative;
  double c0 = 0.5;
  /// Symbols of points closer than this to c0 are flagged unreliable.
  double eta = 1e-9;

  double operator()(double x) const { return f(x); }
};

/// x ↦ r x (1 - x), 0 < r <= 4.
UnimodalMap logistic_map(double r);
/// x ↦ s·min(x, 1 - x), 0 < s <= 2.
UnimodalMap tent_map(double slope);
/// Piecewise linear through (0,0), (c0,height), (1,0).
UnimodalMap piecewise_linear_map(double c0, double height);

/// Raised when an orbit leaves [0,1].
class OrbitEscaped : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotRenormalizable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Itinerary {
  BinaryWord symbols;
  std::vector<bool> reliable;

  /// Length of the longest prefix with every symbol reliable.
  std::size_t reliable_prefix() const;
};

/// s_i = 1 iff f^{i-1}(x) >= c0. A symbol is unreliable when the orbit point
/// lies within max(eta, propagated rounding error) of c0.
Itinerary itinerary(const UnimodalMap& map, double x, std::size_t n);

/// Itinerary of f(c0).
Itinerary kneading(const UnimodalMap& map, std::size_t n);

/// τ of the reliable prefix of an itinerary as a dyadic rational.
Rational tau_truncation(const Itinerary& it);

struct RenormalizedMap {
  UnimodalMap map;
  double a = 0.0;  ///< a in (0, c0) with f(a) = b
  double b = 0.0;  ///< fixed point in (c0, 1)
};

/// (Rf)(x) = L(f(f(L^{-1}(x)))) with L(x) = (x - b)/(a - b). Requires
/// f(f(c0)) >= a so that Rf maps [0,1] into itself.
RenormalizedMap renormalize_map(const UnimodalMap& map);

/// r in [lo, hi] with τ(K(f_r)) crossing `target`, by bisection on the τ
/// truncation of n kneading symbols; stops at width `tol`.
double locate_logistic_parameter(const Rational& target, double lo, double hi, std::size_t n, double tol = 1e-12);

struct OrderReport {
  std::size_t decided = 0;     ///< reliable pairs with a discrepancy
  std::size_t equal_prefix = 0;
  std::size_t unreliable = 0;  ///< skipped: unreliable symbol before the discrepancy
  std::size_t violations = 0;  ///< x < y but τ(i(x)) > τ(i(y)) on the window
};

/// Samples x < y uniformly until `pairs` decided pairs are seen.
OrderReport order_preservation_check(const UnimodalMap& map, std::size_t pairs, std::size_t n, std::uint64_t seed);

struct ScanRow {
  double r;
  std::size_t reliable;  ///< reliable kneading symbols
  Rational tau;          ///< τ truncation on the reliable prefix
  BinaryWord kneading;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::size_t decreases = 0;  ///< strict decreases compared at the common reliable length
};

/// Logistic family on the given grid (each r in [2.9, 4]).
ScanReport monotonicity_scan(const std::vector<double>& grid, std::size_t n);

/// `steps` evenly spaced parameters from `from` to `to` inclusive.
std::vector<double> linear_grid(double from, double to, std::size_t steps);

}  // namespace kneading
