#pragma once

// Continued fractions x = 1/(a_1 + 1/(a_2 + ...)) = [a_1, a_2, ...] of
// numbers in (0,1].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kneading/dyadic.hpp"
#include "kneading/rational.hpp"

namespace kneading {

/// Canonical expansion: every quotient >= 1 and the last one >= 2 unless the
/// expansion is [1] (the value 1).
struct ContinuedFraction {
  std::vector<Integer> quotients;

  std::size_t size() const { return quotients.size(); }
  Rational value() const;
  std::string to_string() const;  // "[1,4,1,2]"
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// r/s = [a_1, ..., a_index].
struct Convergent {
  Integer r;
  Integer s;
  std::size_t index = 0;
};

/// Euclid's algorithm; throws std::domain_error unless 0 < x <= 1.
ContinuedFraction cf_of_rational(const Rational& x);

/// Quotients shared by every number in [lo, hi]. Stops as soon as the two
/// ends disagree, and withholds a quotient when an endpoint terminates there
/// in a way that would change the canonical form of the preceding ones.
std::vector<Integer> cf_of_interval(const Rational& lo, const Rational& hi);
std::vector<Integer> cf_of_enclosure(const DyadicEnclosure& e);

std::vector<Convergent> convergents(const ContinuedFraction& cf);

struct CfRow {
  unsigned j = 0;
  ContinuedFraction cf;
  std::size_t n = 0;  ///< n_j, the length of the expansion of τ_j
};

/// Expansions of τ_1 .. τ_jmax.
std::vector<CfRow> cf_table(unsigned jmax);

enum class Continuation { Verbatim, Decrement, Neither };
std::string to_string(Continuation c);

struct ContinuationReport {
  unsigned j = 0;
  std::size_t n_j = 0;
  Continuation observed = Continuation::Neither;
  /// Decrement when n_j is odd, Verbatim when even.
  Continuation predicted = Continuation::Neither;
  /// Length of the common leading block of CF(τ_j) and CF(τ_{j+1}).
  std::size_t shared_prefix = 0;
};

/// How CF(τ_{j+1}) continues CF(τ_j).
ContinuationReport cf_continuation_check(unsigned j);

}  // namespace kneading
