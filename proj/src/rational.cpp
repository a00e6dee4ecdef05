#include "kneading/rational.hpp"

#include <stdexcept>

namespace kneading {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer pow2(std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational inv_pow2(std::uint64_t e) { return Rational(Integer(1), pow2(e)); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer: " + std::string(text));
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return make_rational(num, den);
}

bool is_dyadic(const Rational& x) {
  const Integer& d = x.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

std::uint64_t dyadic_exponent(const Rational& x) {
  if (!is_dyadic(x)) throw std::domain_error("not a dyadic rational: " + to_string(x));
  return mpz_scan1(x.get_den().get_mpz_t(), 0);
}

std::string to_dyadic_string(const Rational& x) {
  return x.get_num().get_str() + "/2^" + std::to_string(dyadic_exponent(x));
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

}  // namespace kneading
