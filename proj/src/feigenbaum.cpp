#include "kneading/feigenbaum.hpp"

#include <bit>
#include <stdexcept>

namespace kneading {

namespace {

BinaryWord digit_rule(unsigned j) {
  BinaryWord t = BinaryWord::parse("10");
  for (unsigned level = 1; level < j; ++level) {
    const std::size_t n = t.size();
    BinaryWord head = t.prefix(n - 1);
    BinaryWord next = head;
    next.push_back(t.at(n) ^ 1);
    next += head.complement();
    next.push_back(t.at(n));
    t = std::move(next);
  }
  return t;
}

BinaryWord pair_rule(unsigned j) {
  const auto rule = pair_substitution();
  Word w{2};  // c = 10 is τ_1
  for (unsigned level = 1; level < j; ++level) w = substitute(rule, w);
  std::vector<Symbol> bits;
  bits.reserve(2 * w.size());
  for (Symbol letter : w) {
    bits.push_back(letter >> 1);
    bits.push_back(letter & 1);
  }
  return BinaryWord(std::move(bits));
}

// Repeating block of length 2^j of p/q, where q divides 2^{2^j} - 1.
BinaryWord digits_of_fraction(const Integer& p, const Integer& q, unsigned j) {
  const std::uint64_t len = std::uint64_t{1} << j;
  Integer scaled = p * (pow2(len) - 1);
  if (!mpz_divisible_p(scaled.get_mpz_t(), q.get_mpz_t())) {
    throw std::logic_error("denominator does not divide 2^{2^j} - 1");
  }
  Integer v = scaled / q;
  std::vector<Symbol> bits(len);
  for (std::uint64_t i = 0; i < len; ++i) bits[len - 1 - i] = mpz_tstbit(v.get_mpz_t(), i) ? 1 : 0;
  return BinaryWord(std::move(bits));
}

TauLevel from_digits(unsigned j, BinaryWord digits) {
  Rational value = tau_of_periodic({SymbolStream::periodic(digits)});
  return TauLevel{j, value.get_num(), value.get_den(), std::move(digits)};
}

TauLevel from_fraction(unsigned j, Integer p, Integer q) {
  Rational value = make_rational(p, q);
  BinaryWord digits = digits_of_fraction(value.get_num(), value.get_den(), j);
  return TauLevel{j, value.get_num(), value.get_den(), std::move(digits)};
}

}  // namespace

Integer fermat_denominator(unsigned j) {
  if (j == 0) throw std::invalid_argument("levels start at j = 1");
  return pow2(std::uint64_t{1} << (j - 1)) + 1;
}

TauLevel tau_level(unsigned j, TauMethod method) {
  if (j == 0) throw std::invalid_argument("levels start at j = 1");
  if (j > 24) throw std::invalid_argument("tau_level supports j <= 24");
  TauLevel level;
  switch (method) {
    case TauMethod::DigitRule:
      level = from_digits(j, digit_rule(j));
      break;
    case TauMethod::PairSubstitution:
      level = from_digits(j, pair_rule(j));
      break;
    case TauMethod::PqRecursion: {
      Integer p = 2, q = 3;
      for (unsigned i = 1; i < j; ++i) {
        Integer np = 2 + p * (q - 2);
        Integer nq = 2 + q * (q - 2);
        p = std::move(np);
        q = std::move(nq);
      }
      level = from_fraction(j, p, q);
      break;
    }
    case TauMethod::ClosedForm: {
      // Empty product for j = 1 gives p_1 = 3 - 1 = 2.
      Integer q = fermat_denominator(j);
      Integer prod = 1;
      for (unsigned k = 0; k + 2 <= j; ++k) prod *= pow2(std::uint64_t{1} << k) - 1;
      level = from_fraction(j, q - prod, q);
      break;
    }
  }
  if (level.q != fermat_denominator(j)) {
    throw std::logic_error("tau level " + std::to_string(j) + " has a non-Fermat denominator");
  }
  return level;
}

nlohmann::json to_json(const TauLevel& level) {
  return {{"j", level.j}, {"p", level.p.get_str()}, {"q", level.q.get_str()},
          {"digits", level.period_digits.to_string()}};
}

Rational tau_difference(unsigned j) {
  Rational tj = tau_level(j, TauMethod::PqRecursion).value();
  Rational tnext = tau_level(j + 1, TauMethod::PqRecursion).value();
  Rational by_subtraction = tnext - tj;
  Rational by_formula = make_rational(2, pow2(std::uint64_t{1} << j) + 1) * (1 - tj);
  by_subtraction.canonicalize();
  by_formula.canonicalize();
  if (by_subtraction != by_formula) {
    throw std::logic_error("tau difference identity fails at j = " + std::to_string(j));
  }
  return by_subtraction;
}

Symbol tau_infinity_digit(std::uint64_t k) {
  if (k == 0) throw std::out_of_range("digit index is 1-based");
  std::uint64_t odd = k >> std::countr_zero(k);
  return static_cast<Symbol>(std::popcount(odd) & 1);
}

TDigits tau_infinity_digits() {
  return {SymbolStream::derived("tau_inf digits", [](std::size_t n) {
    std::vector<Symbol> out(n);
    for (std::size_t k = 1; k <= n; ++k) out[k - 1] = tau_infinity_digit(k);
    return out;
  })};
}

DyadicEnclosure tau_infinity_enclosure(std::uint64_t nbits, EnclosureMethod method) {
  if (nbits == 0) throw std::invalid_argument("nbits must be positive");
  DyadicEnclosure e;
  e.precision_bits = nbits;
  if (method == EnclosureMethod::DigitSum) {
    Integer v = 0;
    for (std::uint64_t k = 1; k <= nbits; ++k) {
      v <<= 1;
      v += tau_infinity_digit(k);
    }
    e.lo = make_rational(v, pow2(nbits));
    e.hi = make_rational(v + 1, pow2(nbits));
  } else {
    // Smallest K with 2^{K+1} >= nbits; the bracket width is P_K 2^{-2^{K+1}}.
    unsigned K = 0;
    while ((std::uint64_t{1} << (K + 1)) < nbits) ++K;
    Rational partial = 1;
    for (unsigned k = 0; k <= K; ++k) partial *= 1 - inv_pow2(std::uint64_t{1} << k);
    Rational tail_floor = 1 - inv_pow2((std::uint64_t{1} << (K + 1)) - 1);
    e.lo = 1 - partial / 2;
    e.hi = 1 - partial * tail_floor / 2;
    e.lo.canonicalize();
    e.hi.canonicalize();
  }
  e.validate();
  return e;
}

TDigits renormalize_tau(const TDigits& t) { return {decimate(t.digits, false)}; }

bool thue_morse_check(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  BinaryWord u = fixed_point_prefix(feigenbaum_substitution(), 1, n);
  BinaryWord w = fixed_point_prefix(thue_morse_substitution(), 0, n);
  BinaryWord zero_u = BinaryWord::parse("0") + u.prefix(n - 1);
  BinaryWord lhs = BinaryWord::parse("0") + xi(u.prefix(n - 1));
  BinaryWord rhs = xi(zero_u);
  return lhs == w && rhs == w;
}

}  // namespace kneading
