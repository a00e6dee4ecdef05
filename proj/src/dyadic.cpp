#include "kneading/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace kneading {

void DyadicEnclosure::validate() const {
  if (lo > hi) throw std::logic_error("enclosure has lo > hi");
  if (!is_dyadic(lo) || !is_dyadic(hi)) throw std::logic_error("enclosure endpoints must be dyadic");
  if (hi - lo > inv_pow2(precision_bits)) throw std::logic_error("enclosure wider than its precision");
}

std::uint64_t precision_of_width(const Rational& width) {
  constexpr std::uint64_t cap = 1u << 20;
  if (width <= 0) return cap;
  // 2^{-n} >= width  <=>  2^n <= 1/width
  Rational inv = 1 / width;
  Integer f = floor(inv);
  if (f == 0) return 0;
  return std::min<std::uint64_t>(mpz_sizeinbase(f.get_mpz_t(), 2) - 1, cap);
}

std::optional<DyadicEnclosure> intersect(const DyadicEnclosure& a, const DyadicEnclosure& b) {
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  if (lo > hi) return std::nullopt;
  return DyadicEnclosure{lo, hi, precision_of_width(hi - lo)};
}

nlohmann::json to_json(const DyadicEnclosure& e) {
  // Both endpoints over the common denominator 2^n.
  std::uint64_t n = std::max(dyadic_exponent(e.lo), dyadic_exponent(e.hi));
  auto spell = [n](const Rational& x) {
    Integer num = x.get_num() * pow2(n - dyadic_exponent(x));
    return num.get_str() + "/2^" + std::to_string(n);
  };
  return {{"lo", spell(e.lo)}, {"hi", spell(e.hi)}, {"bits", e.precision_bits}};
}

}  // namespace kneading
