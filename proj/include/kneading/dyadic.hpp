#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "kneading/rational.hpp"

namespace kneading {

/// Closed interval [lo, hi] with dyadic endpoints bracketing a real number.
struct DyadicEnclosure {
  Rational lo;
  Rational hi;
  std::uint64_t precision_bits = 0;

  /// Checks lo <= hi, dyadic endpoints and hi - lo <= 2^{-precision_bits}.
  void validate() const;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Intersection, or nullopt when the intervals are disjoint. The precision of
/// the result is recomputed from its width.
std::optional<DyadicEnclosure> intersect(const DyadicEnclosure& a, const DyadicEnclosure& b);

/// Largest n with width <= 2^{-n} (capped at 1<<20 for a degenerate interval).
std::uint64_t precision_of_width(const Rational& width);

/// {lo: "a/2^n", hi: "b/2^n", bits: n}
nlohmann::json to_json(const DyadicEnclosure& e);

}  // namespace kneading
