#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kneading {

using Integer = mpz_class;
/// Exact rational in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den and canonicalizes it. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// 2^e as an integer.
Integer pow2(std::uint64_t e);

/// 2^{-e} as a rational.
Rational inv_pow2(std::uint64_t e);

/// "p/q" with q >= 1 always spelled out (so 1 is "1/1").
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// True when the denominator of x is a power of two.
bool is_dyadic(const Rational& x);

/// Exponent e with den(x) = 2^e; x must be dyadic.
std::uint64_t dyadic_exponent(const Rational& x);

/// "a/2^n" spelling of a dyadic rational.
std::string to_dyadic_string(const Rational& x);

/// Floor of a rational.
Integer floor(const Rational& x);

}  // namespace kneading
