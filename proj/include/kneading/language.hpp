#pragma once

// Words admissible for a kneading sequence K, the complexity function
// p(n) and the forbidden words read off the zeros of the τ digits.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kneading/encoding.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

enum class LanguageMode {
  Core,  ///< τ(σK) <= τ(σ^m w) <= τ(K) at word level (two-sided)
  Full   ///< upper bound only (orbits anywhere in [0,1])
};

std::string to_string(LanguageMode m);

struct LanguageQuery {
  SymbolStream K;
  std::size_t nmax = 0;
  LanguageMode mode = LanguageMode::Core;
};

/// Raised when an enumeration would exceed the node budget.
class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxLanguageLength = 32;
inline constexpr std::uint64_t kLanguageNodeBudget = std::uint64_t{1} << 26;

/// p(1..nmax); element n-1 holds p(n). Throws std::invalid_argument when K is
/// not maximal and EnumerationTooLarge past the node budget.
std::vector<std::uint64_t> complexity(const LanguageQuery& q);

/// All admissible words of length exactly n in lexicographic order.
std::vector<BinaryWord> admissible_words(const LanguageQuery& q, std::size_t n);

/// For each j <= nmax with t_j = 0, the word s_1 … s_{j-1} ŝ_j, s = ξ^{-1}(t).
std::vector<BinaryWord> forbidden_words(const TDigits& t, std::size_t nmax);

/// True when `w` contains `factor` at some position.
bool contains_factor(const BinaryWord& w, const BinaryWord& factor);

}  // namespace kneading
