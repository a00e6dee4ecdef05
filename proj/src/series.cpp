#include "kneading/series.hpp"

#include <stdexcept>

namespace kneading {

IntSeries reciprocal(const IntSeries& a) {
  const Integer& c0 = a[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("integer reciprocal needs constant term +-1");
  IntSeries r(a.order());
  r[0] = c0;  // 1/c0 = c0
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Integer acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += a[k] * r[n - k];
    }
    r[n] = -acc * c0;
  }
  return r;
}

IntSeries one_minus_power(std::size_t m, std::size_t order) {
  IntSeries p(order);
  p[0] = 1;
  if (m <= order) p[m] -= 1;
  return p;
}

RationalSeries to_rational_series(const IntSeries& a) {
  RationalSeries r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r[k] = Rational(a[k]);
  return r;
}

IntSeries to_integer_series(const RationalSeries& a) {
  IntSeries r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (a[k].get_den() != 1) {
      throw std::domain_error("coefficient " + std::to_string(k) + " is not an integer: " + to_string(a[k]));
    }
    r[k] = a[k].get_num();
  }
  return r;
}

RationalSeries formal_log(const IntSeries& a) {
  if (a[0] != 1) throw std::domain_error("formal log needs constant term 1");
  // L' = a'/a, solved term by term: n a_0 L_n = n a_n - Σ_{k=1}^{n-1} k L_k a_{n-k}.
  const std::size_t N = a.order();
  RationalSeries L(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc = Rational(Integer(n) * a[n]);
    for (std::size_t k = 1; k < n; ++k) {
      if (a[n - k] != 0) acc -= Rational(Integer(k)) * L[k] * Rational(a[n - k]);
    }
    L[n] = acc / Rational(Integer(n));
    L[n].canonicalize();
  }
  return L;
}

RationalSeries formal_exp(const RationalSeries& a) {
  if (a[0] != 0) throw std::domain_error("formal exp needs zero constant term");
  // E' = a' E: n E_n = Σ_{k=1}^{n} k a_k E_{n-k}.
  const std::size_t N = a.order();
  RationalSeries E(N);
  E[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += Rational(Integer(k)) * a[k] * E[n - k];
    }
    E[n] = acc / Rational(Integer(n));
    E[n].canonicalize();
  }
  return E;
}

Rational evaluate(const IntSeries& a, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = a.order() + 1; k-- > 0;) acc = acc * x + Rational(a[k]);
  acc.canonicalize();
  return acc;
}

std::string to_string(const IntSeries& a) {
  std::string out;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    const Integer& c = a[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace kneading
