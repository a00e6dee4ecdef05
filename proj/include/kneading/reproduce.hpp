#pragma once

// Regeneration of the published tables with embedded golden values, and the
// τ specifications accepted on the command line.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kneading/rational.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

/// "p/q", "feigenbaum:j" or "feigenbaum:inf".
struct TauSpec {
  enum class Kind { Rational, FeigenbaumLevel, FeigenbaumInfinity };
  Kind kind = Kind::Rational;
  Rational value;  ///< for Rational
  unsigned level = 0;  ///< for FeigenbaumLevel

  std::string to_string() const;
  /// The kneading sequence; exact rationals for the first two kinds.
  SymbolStream kneading() const;
};

/// Throws std::invalid_argument on malformed input.
TauSpec parse_tau_spec(std::string_view text);

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReproduceReport {
  std::string id;
  std::vector<GoldenCheck> checks;

  bool pass() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& reproduce_ids();

/// Throws std::invalid_argument for an unknown identifier.
ReproduceReport reproduce(std::string_view id);

}  // namespace kneading
