#include "kneading/encoding.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace kneading {

namespace {

std::vector<Symbol> parities(std::span<const Symbol> s) {
  std::vector<Symbol> t(s.size());
  Symbol acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = acc ^= s[i];
  return t;
}

std::vector<Symbol> differences(std::span<const Symbol> t) {
  std::vector<Symbol> s(t.size());
  Symbol prev = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    s[i] = t[i] ^ prev;
    prev = t[i];
  }
  return s;
}

}  // namespace

TDigits xi(const SymbolStream& s) {
  if (s.is_eventually_periodic()) {
    const std::size_t pre = s.preperiod().size();
    const std::size_t per = s.period().size();
    const std::size_t digit_period = s.period().popcount() % 2 == 0 ? per : 2 * per;
    BinaryWord t = xi(s.prefix(pre + digit_period));
    return {SymbolStream::eventually_periodic(t.prefix(pre), t.drop(pre))};
  }
  return {SymbolStream::derived("xi(" + s.describe() + ")",
                                [s](std::size_t n) { return parities(s.prefix(n).bits()); })};
}

BinaryWord xi(const BinaryWord& w) { return BinaryWord(parities(w.bits())); }

SymbolStream xi_inverse(const TDigits& t) {
  const SymbolStream& d = t.digits;
  if (d.is_eventually_periodic()) {
    // s_k for k >= pre+2 only involves periodic digits.
    const std::size_t pre = d.preperiod().size() + 1;
    BinaryWord s = xi_inverse(d.prefix(pre + d.period().size()));
    return SymbolStream::eventually_periodic(s.prefix(pre), s.drop(pre));
  }
  return SymbolStream::derived("xi^-1(" + d.describe() + ")",
                               [d](std::size_t n) { return differences(d.prefix(n).bits()); });
}

BinaryWord xi_inverse(const BinaryWord& t) { return BinaryWord(differences(t.bits())); }

int epsilon(const SymbolStream& s, std::uint64_t k) {
  if (k == 0) throw std::out_of_range("epsilon index is 1-based");
  if (s.is_eventually_periodic()) return 1 - 2 * static_cast<int>(xi(s).at(k));
  return 1 - 2 * static_cast<int>(xi(s.prefix(k)).at(k));
}

Rational tau_of_word(const BinaryWord& t) {
  Integer v = 0;
  for (Symbol d : t.bits()) {
    v <<= 1;
    v += d;
  }
  return make_rational(v, pow2(t.size()));
}

Rational tau_of_periodic(const TDigits& t) {
  const SymbolStream& d = t.digits;
  if (!d.is_eventually_periodic()) throw std::domain_error("tau_of_periodic needs eventually periodic digits");
  const BinaryWord& pre = d.preperiod();
  const BinaryWord& per = d.period();
  Integer v = 0;
  for (Symbol b : per.bits()) {
    v <<= 1;
    v += b;
  }
  Rational tail = make_rational(v, pow2(per.size()) - 1) * inv_pow2(pre.size());
  Rational r = tau_of_word(pre) + tail;
  r.canonicalize();
  return r;
}

Rational tau_of(const SymbolStream& s) { return tau_of_periodic(xi(s)); }

TDigits binary_expansion(const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("binary expansion needs x in [0,1]: " + to_string(x));
  if (x == 1) return {SymbolStream::periodic(BinaryWord::parse("1"))};
  const Integer& q = x.get_den();
  Integer r = x.get_num();
  std::map<Integer, std::size_t> seen;
  std::vector<Symbol> digits;
  while (seen.find(r) == seen.end()) {
    seen.emplace(r, digits.size());
    r <<= 1;
    if (r >= q) {
      digits.push_back(1);
      r -= q;
    } else {
      digits.push_back(0);
    }
  }
  const std::size_t start = seen[r];
  BinaryWord all(std::move(digits));
  return {SymbolStream::eventually_periodic(all.prefix(start), all.drop(start))};
}

Rational tent(const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("tent map domain is [0,1]: " + to_string(x));
  static const Rational half(1, 2);
  Rational y = x < half ? Rational(2 * x) : Rational(2 * (1 - x));
  y.canonicalize();
  return y;
}

bool in_lambda(const Rational& tau) {
  if (tau < 0 || tau > 1) throw std::domain_error("in_lambda needs tau in [0,1]");
  std::set<Rational> visited;
  Rational x = tau;
  while (visited.insert(x).second) {
    if (x > tau) return false;
    x = tent(x);
  }
  return true;
}

WordOrder word_order(const BinaryWord& u, const BinaryWord& v) {
  const std::size_t n = std::min(u.size(), v.size());
  auto a = u.bits();
  auto b = v.bits();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? WordOrder::Less : WordOrder::Greater;
  }
  return WordOrder::EqualPrefix;
}

std::string to_string(WordOrder o) {
  switch (o) {
    case WordOrder::Less: return "LT";
    case WordOrder::EqualPrefix: return "EQ-prefix";
    case WordOrder::Greater: return "GT";
  }
  return "?";
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Orders the window of length len of τ(σ^m s), with T the parity prefix of s
// (T[0] = 0, T[i] = t_i), against the reference digits ref[1..len].
WordOrder compare_shift(const std::vector<Symbol>& T, std::size_t m, const std::vector<Symbol>& ref,
                        std::size_t len) {
  for (std::size_t k = 1; k <= len; ++k) {
    Symbol d = T[m + k] ^ T[m];
    if (d != ref[k]) return d < ref[k] ? WordOrder::Less : WordOrder::Greater;
  }
  return WordOrder::EqualPrefix;
}

std::vector<Symbol> parity_table(const SymbolStream& s, std::size_t n) {
  auto t = parities(s.prefix(n).bits());
  t.insert(t.begin(), 0);
  return t;
}

Tristate admissible_impl(const SymbolStream& s, const SymbolStream& K, std::uint64_t horizon, bool lower) {
  if (horizon == 0) throw std::invalid_argument("horizon must be positive");
  if (s.is_eventually_periodic() && K.is_eventually_periodic()) {
    const Rational upper = tau_of(K);
    const Rational low = tau_of(shift(K, 1));
    const std::size_t shifts = s.preperiod().size() + s.period().size();
    for (std::size_t m = 0; m < shifts; ++m) {
      Rational v = tau_of(shift(s, m));
      if (v > upper || (lower && v < low)) return Tristate::False;
    }
    return Tristate::True;
  }
  const std::size_t len = horizon;
  auto Ts = parity_table(s, horizon + len + 1);
  auto TK = parity_table(K, len + 2);
  std::vector<Symbol> upper(len + 1), low(len + 1);
  for (std::size_t k = 1; k <= len; ++k) {
    upper[k] = TK[k];
    low[k] = TK[k + 1] ^ TK[1];
  }
  bool tied = false;
  for (std::size_t m = 0; m <= horizon; ++m) {
    WordOrder up = compare_shift(Ts, m, upper, len);
    if (up == WordOrder::Greater) return Tristate::False;
    tied = tied || up == WordOrder::EqualPrefix;
    if (lower) {
      WordOrder lo = compare_shift(Ts, m, low, len);
      if (lo == WordOrder::Less) return Tristate::False;
      tied = tied || lo == WordOrder::EqualPrefix;
    }
  }
  return tied ? Tristate::Undetermined : Tristate::True;
}

}  // namespace

Tristate is_maximal(const SymbolStream& K, std::uint64_t horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be positive");
  if (K.is_eventually_periodic()) {
    const Rational top = tau_of(K);
    const std::size_t shifts = K.preperiod().size() + K.period().size();
    for (std::size_t m = 1; m < shifts; ++m) {
      if (tau_of(shift(K, m)) > top) return Tristate::False;
    }
    return Tristate::True;
  }
  const std::size_t len = horizon;
  auto T = parity_table(K, horizon + len + 1);
  bool tied = false;
  for (std::size_t m = 1; m <= horizon; ++m) {
    WordOrder o = compare_shift(T, m, T, len);
    if (o == WordOrder::Greater) return Tristate::False;
    tied = tied || o == WordOrder::EqualPrefix;
  }
  return tied ? Tristate::Undetermined : Tristate::True;
}

Tristate admissible(const SymbolStream& s, const SymbolStream& K, std::uint64_t horizon) {
  return admissible_impl(s, K, horizon, true);
}

Tristate admissible_full(const SymbolStream& s, const SymbolStream& K, std::uint64_t horizon) {
  return admissible_impl(s, K, horizon, false);
}

SymbolStream kneading_of_tau(const Rational& tau) {
  if (tau <= 0 || tau > 1) throw std::domain_error("τ must lie in (0, 1]: " + to_string(tau));
  return xi_inverse(binary_expansion(tau));
}

}  // namespace kneading
