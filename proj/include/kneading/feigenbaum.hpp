#pragma once

// Exact arithmetic of the period-doubling parameters τ_j = τ(K_j) and of
// their limit τ_∞.

#include <cstdint>

#include <json.hpp>

#include "kneading/dyadic.hpp"
#include "kneading/encoding.hpp"
#include "kneading/rational.hpp"

namespace kneading {

/// τ_j = p/q with q = 2^{2^{j-1}} + 1 and repeating digit block of length 2^j.
struct TauLevel {
  unsigned j = 0;
  Integer p;
  Integer q;
  BinaryWord period_digits;

  Rational value() const { return make_rational(p, q); }
  friend bool operator==(const TauLevel&, const TauLevel&) = default;
};

enum class TauMethod { DigitRule, PairSubstitution, PqRecursion, ClosedForm };

/// Builds level j >= 1 by one of four independent routes.
TauLevel tau_level(unsigned j, TauMethod method = TauMethod::DigitRule);

/// {"j": j, "p": "...", "q": "...", "digits": "..."}
nlohmann::json to_json(const TauLevel& level);

/// The Fermat number 2^{2^{j-1}} + 1.
Integer fermat_denominator(unsigned j);

/// τ_{j+1} - τ_j. Computed by subtraction and by 2(1 - τ_j)/(2^{2^j} + 1);
/// throws std::logic_error if the two disagree.
Rational tau_difference(unsigned j);

/// Digit t_k of τ_∞: parity of the binary digit sum of the odd part of k.
Symbol tau_infinity_digit(std::uint64_t k);
/// All digits of τ_∞ as a stream (random access through tau_infinity_digit).
TDigits tau_infinity_digits();

enum class EnclosureMethod { DigitSum, ProductFormula };

/// Dyadic interval of width <= 2^{-nbits} containing τ_∞.
///   DigitSum:       [Σ_{k<=n} t_k 2^{-k}, that + 2^{-n}]
///   ProductFormula: τ_∞ = 1 - ½ ∏_{k>=0} (1 - 2^{-2^k}) with the tail
///                   product bounded below by 1 - 2^{1-2^{K+1}}.
DyadicEnclosure tau_infinity_enclosure(std::uint64_t nbits, EnclosureMethod method);

/// 0.t_1 t_2 t_3 ... -> 0.t_2 t_4 t_6 ...
TDigits renormalize_tau(const TDigits& t);

/// Checks on n-symbol prefixes that 0 ξ(u) = ξ(0u) = w, u the Feigenbaum fixed
/// point from 1 and w the Thue–Morse fixed point from 0.
bool thue_morse_check(std::size_t n);

}  // namespace kneading
