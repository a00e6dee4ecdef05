#pragma once

// The parity encoding s -> t (t_k = s_1 + ... + s_k mod 2), the value
// τ = Σ t_k 2^{-k}, the tent map, the order on itineraries and membership in
// the set of kneading parameters Λ = {τ : T^m(τ) <= τ for all m}.

#include <cstdint>
#include <string>

#include "kneading/rational.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

/// Binary digits t_1 t_2 ... of a parameter τ; ε_k = 1 - 2 t_k.
struct TDigits {
  SymbolStream digits;

  Symbol at(std::uint64_t k) const { return digits.at(k); }
  BinaryWord prefix(std::size_t n) const { return digits.prefix(n); }
};

/// Partial-sum parities. An odd-weight period doubles the digit period.
TDigits xi(const SymbolStream& s);
BinaryWord xi(const BinaryWord& w);

/// s_1 = t_1, s_k = t_k xor t_{k-1}.
SymbolStream xi_inverse(const TDigits& t);
BinaryWord xi_inverse(const BinaryWord& t);

/// ε_k = (-1)^{s_1+...+s_k}, k >= 1.
int epsilon(const SymbolStream& s, std::uint64_t k);

/// Exact Σ t_k 2^{-k}. Throws std::domain_error unless t is eventually periodic.
Rational tau_of_periodic(const TDigits& t);
/// τ(s) = tau_of_periodic(xi(s)).
Rational tau_of(const SymbolStream& s);
/// Value of a finite digit word, Σ_{k<=n} t_k 2^{-k} (a dyadic).
Rational tau_of_word(const BinaryWord& t);

/// Binary expansion of x in [0,1] as an eventually periodic digit stream.
/// Dyadic values other than 1 use the terminating expansion; 1 = 0.111...
TDigits binary_expansion(const Rational& x);

/// T(x) = 2x for x < 1/2, 2(1-x) for x >= 1/2. Throws std::domain_error outside [0,1].
Rational tent(const Rational& x);

/// Exact test of T^m(τ) <= τ for all m >= 0 by enumerating the (finite) tent orbit.
bool in_lambda(const Rational& tau);

/// Kneading sequence with τ(K) = tau: ξ^{-1} of the binary expansion.
SymbolStream kneading_of_tau(const Rational& tau);

enum class WordOrder { Less, EqualPrefix, Greater };
/// Lexicographic comparison of digit words by first discrepancy; EqualPrefix
/// when one is a prefix of the other.
WordOrder word_order(const BinaryWord& u, const BinaryWord& v);
std::string to_string(WordOrder o);

enum class Tristate { False, True, Undetermined };
std::string to_string(Tristate t);

/// τ(σ^m K) <= τ(K) for all m >= 0. Exact for eventually periodic K; for
/// other streams checks shifts 1..horizon on digit windows of length horizon.
Tristate is_maximal(const SymbolStream& K, std::uint64_t horizon);

/// τ(σK) <= τ(σ^m s) <= τ(K) for all m >= 0 (itinerary of a point of the core).
/// Exact when both streams are eventually periodic; otherwise checks shifts
/// 0..horizon on windows of length horizon.
Tristate admissible(const SymbolStream& s, const SymbolStream& K, std::uint64_t horizon);

/// Upper bound only: τ(σ^m s) <= τ(K) for all m >= 0. Admits itineraries of
/// points outside the core, e.g. the fixed point 0.
Tristate admissible_full(const SymbolStream& s, const SymbolStream& K, std::uint64_t horizon);

}  // namespace kneading
