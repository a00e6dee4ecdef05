#include "kneading/cfrac.hpp"

#include <stdexcept>

#include "kneading/feigenbaum.hpp"

namespace kneading {

Rational ContinuedFraction::value() const {
  if (quotients.empty()) throw std::logic_error("empty continued fraction has no value");
  Rational x = 0;
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
    x = 1 / (Rational(*it) + x);
  }
  x.canonicalize();
  return x;
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (i) out += ",";
    out += quotients[i].get_str();
  }
  return out + "]";
}

ContinuedFraction cf_of_rational(const Rational& x) {
  if (x <= 0 || x > 1) throw std::domain_error("continued fraction needs 0 < x <= 1: " + to_string(x));
  ContinuedFraction cf;
  Integer num = x.get_num();
  Integer den = x.get_den();
  // x = num/den; the next quotient is floor(den/num).
  while (num != 0) {
    Integer a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    cf.quotients.push_back(a);
    den = num;
    num = r;
  }
  return cf;
}

std::vector<Integer> cf_of_interval(const Rational& lo_in, const Rational& hi_in) {
  if (lo_in > hi_in) throw std::invalid_argument("interval has lo > hi");
  if (lo_in == hi_in) {
    if (lo_in <= 0) return {};
    return cf_of_rational(lo_in).quotients;
  }
  std::vector<Integer> out;
  Rational lo = lo_in, hi = hi_in;
  if (hi > 1) return out;
  while (lo > 0) {
    // 1/x is decreasing: every x in [lo, hi] has 1/x in [1/hi, 1/lo].
    Rational a_lo = 1 / hi;
    Rational a_hi = 1 / lo;
    Integer q = floor(a_lo);
    if (floor(a_hi) != q) break;
    if (Rational(q) == a_lo) {
      // hi terminates here. A trailing 1 after earlier quotients would fold
      // into its predecessor, so nothing more can be certified.
      if (q == 1 && !out.empty()) break;
      out.push_back(q);
      break;
    }
    out.push_back(q);
    Rational next_lo = a_lo - q;
    Rational next_hi = a_hi - q;
    next_lo.canonicalize();
    next_hi.canonicalize();
    lo = next_lo;
    hi = next_hi;
  }
  return out;
}

std::vector<Integer> cf_of_enclosure(const DyadicEnclosure& e) { return cf_of_interval(e.lo, e.hi); }

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> out;
  Integer r_prev = 1, r = 0;  // r_{-1}, r_0
  Integer s_prev = 0, s = 1;
  for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
    Integer r_next = cf.quotients[i] * r + r_prev;
    Integer s_next = cf.quotients[i] * s + s_prev;
    r_prev = std::move(r);
    s_prev = std::move(s);
    r = std::move(r_next);
    s = std::move(s_next);
    out.push_back({r, s, i + 1});
  }
  return out;
}

std::vector<CfRow> cf_table(unsigned jmax) {
  if (jmax == 0) throw std::invalid_argument("jmax must be positive");
  if (jmax > 16) throw std::invalid_argument("cf_table supports jmax <= 16");
  std::vector<CfRow> rows;
  for (unsigned j = 1; j <= jmax; ++j) {
    auto cf = cf_of_rational(tau_level(j, TauMethod::PqRecursion).value());
    std::size_t n = cf.size();
    rows.push_back({j, std::move(cf), n});
  }
  return rows;
}

std::string to_string(Continuation c) {
  switch (c) {
    case Continuation::Verbatim: return "verbatim";
    case Continuation::Decrement: return "decrement";
    case Continuation::Neither: return "neither";
  }
  return "?";
}

ContinuationReport cf_continuation_check(unsigned j) {
  if (j == 0) throw std::invalid_argument("levels start at j = 1");
  auto cur = cf_of_rational(tau_level(j, TauMethod::PqRecursion).value());
  auto next = cf_of_rational(tau_level(j + 1, TauMethod::PqRecursion).value());
  ContinuationReport rep;
  rep.j = j;
  rep.n_j = cur.size();
  rep.predicted = rep.n_j % 2 == 1 ? Continuation::Decrement : Continuation::Verbatim;
  const auto& a = cur.quotients;
  const auto& b = next.quotients;
  while (rep.shared_prefix < a.size() && rep.shared_prefix < b.size() && a[rep.shared_prefix] == b[rep.shared_prefix]) {
    ++rep.shared_prefix;
  }
  if (b.size() > a.size() && rep.shared_prefix == a.size()) {
    rep.observed = Continuation::Verbatim;
  } else if (b.size() > a.size() && rep.shared_prefix == a.size() - 1 && b[a.size() - 1] == a.back() - 1) {
    rep.observed = Continuation::Decrement;
  } else {
    rep.observed = Continuation::Neither;
  }
  return rep;
}

}  // namespace kneading
