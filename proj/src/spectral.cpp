#include "kneading/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "kneading/encoding.hpp"

namespace kneading {

bool kneading_determinant_is_polynomial(const SymbolStream& K) { return K.is_periodic(); }

IntSeries kneading_determinant(const SymbolStream& K, std::size_t N) {
  if (N == 0) throw std::invalid_argument("order must be positive");
  IntSeries D(N);
  D[0] = 1;
  std::size_t last = N;
  BinaryWord t;
  if (K.is_periodic()) {
    TDigits digits = xi(K);
    const std::size_t n = digits.digits.period().size();
    last = std::min(N, n - 1);
    t = digits.prefix(last);
  } else {
    t = xi(K.prefix(N));
  }
  for (std::size_t k = 1; k <= last; ++k) D[k] = 1 - 2 * static_cast<int>(t.at(k));
  return D;
}

IntSeries zeta_series(const SymbolStream& K, std::size_t N) {
  return reciprocal(one_minus_power(1, N) * kneading_determinant(K, N));
}

int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius(0) is undefined");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

OrbitCounts orbit_counts(const IntSeries& zeta) {
  if (zeta[0] != 1) throw std::domain_error("zeta series must have constant term 1");
  const std::size_t N = zeta.order();
  RationalSeries L = formal_log(zeta);
  OrbitCounts out;
  out.per_counts.assign(N + 1, Integer(0));
  out.prime_counts.assign(N + 1, Integer(0));
  for (std::size_t n = 1; n <= N; ++n) {
    Rational c = L[n] * Rational(Integer(n));
    c.canonicalize();
    if (c.get_den() != 1 || c < 0) {
      throw std::domain_error("#Per_" + std::to_string(n) + " = " + to_string(c) +
                              " is not a nonnegative integer; not a topological zeta function");
    }
    out.per_counts[n] = c.get_num();
  }
  for (std::size_t p = 1; p <= N; ++p) {
    Integer acc = 0;
    for (std::size_t d = 1; d <= p; ++d) {
      if (p % d != 0) continue;
      int mu = moebius(d);
      if (mu != 0) acc += mu * out.per_counts[p / d];
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), p) || acc < 0) {
      throw std::domain_error("orbit count N(" + std::to_string(p) + ") is not a nonnegative integer");
    }
    out.prime_counts[p] = acc / Integer(static_cast<unsigned long>(p));
  }
  return out;
}

IntSeries euler_product(const OrbitCounts& counts) {
  const std::size_t N = counts.order();
  IntSeries result(N);
  result[0] = 1;
  for (std::size_t p = 1; p <= N; ++p) {
    const Integer& np = counts.prime_counts[p];
    if (np == 0) continue;
    // (1 - z^p)^{-np} = Σ_m C(np + m - 1, m) z^{pm}
    IntSeries factor(N);
    Integer binom = 1;
    for (std::size_t m = 0; p * m <= N; ++m) {
      if (m > 0) {
        binom *= np + static_cast<unsigned long>(m - 1);
        binom /= static_cast<unsigned long>(m);
      }
      factor[p * m] = binom;
    }
    result = result * factor;
  }
  return result;
}

IntSeries xi_series(std::size_t N) {
  IntSeries x(N);
  x[0] = 1;
  for (std::size_t m = 1; m <= N; m *= 2) x = x * one_minus_power(m, N);
  return x;
}

IntSeries xi_functional_residual(std::size_t N) {
  IntSeries x = xi_series(N);
  IntSeries squared(N);  // Ξ(z^2)
  for (std::size_t k = 0; 2 * k <= N; ++k) squared[2 * k] = x[k];
  return x - one_minus_power(1, N) * squared;
}

DyadicEnclosure xi_half_enclosure(std::size_t N) {
  IntSeries x = xi_series(N);
  Rational partial = evaluate(x, Rational(1, 2));
  // |Σ_{k>N} c_k 2^{-k}| <= 2^{-N} since |c_k| <= 1.
  Rational tail = inv_pow2(N);
  DyadicEnclosure e;
  e.lo = 1 - (partial + tail) / 2;
  e.hi = 1 - (partial - tail) / 2;
  e.lo.canonicalize();
  e.hi.canonicalize();
  e.precision_bits = N;
  e.validate();
  return e;
}

IntSeries feigenbaum_zeta_denominator(unsigned j, std::size_t N) {
  IntSeries d = one_minus_power(1, N);
  for (unsigned n = 0; n <= j; ++n) d = d * one_minus_power(std::size_t{1} << n, N);
  return d;
}

IntSeries feigenbaum_zeta(unsigned j, std::size_t N) { return reciprocal(feigenbaum_zeta_denominator(j, N)); }

// ------------------------------------------------------------------ entropy

std::string to_string(EntropyResult::Status s) {
  switch (s) {
    case EntropyResult::Status::Positive: return "positive";
    case EntropyResult::Status::Zero: return "zero";
    case EntropyResult::Status::BelowBound: return "below-bound";
  }
  return "?";
}

namespace {

// D with exact integer coefficients; for a truncated infinite series the
// remainder is bounded by z^{N+1}/(1-z) on [0,1).
class SignOracle {
 public:
  SignOracle(std::vector<Integer> coeffs, bool tail) : coeffs_(std::move(coeffs)), tail_(tail) {}

  // Upper bound of D at v.
  std::optional<Rational> upper(const Rational& v) {
    ++checks_;
    auto b = tail_bound(v);
    if (!b) return std::nullopt;
    return horner(v, 0) + *b;
  }

  // Lower bound of D on [u, v]: positive terms at u, negative terms at v.
  std::optional<Rational> lower(const Rational& u, const Rational& v) {
    ++checks_;
    auto b = tail_bound(v);
    if (!b) return std::nullopt;
    return horner(u, 1) + horner(v, -1) - *b;
  }

  std::size_t checks() const { return checks_; }

 private:
  std::optional<Rational> tail_bound(const Rational& v) const {
    if (!tail_) return Rational(0);
    if (v >= 1) return std::nullopt;
    Rational p = 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p *= v;  // v^{N+1}
    return p / (1 - v);
  }

  // Σ c_k x^k over the coefficients with the given sign (0 = all).
  Rational horner(const Rational& x, int sign) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      acc *= x;
      const Integer& c = coeffs_[k];
      if (sign == 0 || (sign > 0 && c > 0) || (sign < 0 && c < 0)) acc += c;
    }
    return acc;
  }

  std::vector<Integer> coeffs_;
  bool tail_;
  std::size_t checks_ = 0;
};

enum class Piece { Positive, Bracket, Unknown };

struct Outcome {
  Piece kind;
  Rational lo, hi;
};

// Left-to-right scan: whenever [u, v] is visited, D > 0 on [0, u] is already
// certified, so a certified negative value at v brackets the smallest root.
Outcome scan(SignOracle& D, const Rational& u, const Rational& v, int depth, std::vector<Rational>& cover) {
  if (auto up = D.upper(v); up && *up < 0) return {Piece::Bracket, u, v};
  if (auto low = D.lower(u, v); low && *low > 0) {
    cover.push_back(v);
    return {Piece::Positive, u, v};
  }
  if (depth == 0) return {Piece::Unknown, u, v};
  Rational m = (u + v) / 2;
  Outcome left = scan(D, u, m, depth - 1, cover);
  if (left.kind != Piece::Positive) return left;
  return scan(D, m, v, depth - 1, cover);
}

Outcome scan_range(SignOracle& D, const Rational& from, const Rational& to, std::size_t pieces, int depth,
                   std::vector<Rational>& cover) {
  Rational step = (to - from) / Rational(Integer(static_cast<unsigned long>(pieces)));
  for (std::size_t i = 0; i < pieces; ++i) {
    Rational u = from + step * Rational(Integer(static_cast<unsigned long>(i)));
    Rational v = i + 1 == pieces ? to : Rational(u + step);
    u.canonicalize();
    v.canonicalize();
    Outcome o = scan(D, u, v, depth, cover);
    if (o.kind != Piece::Positive) return o;
  }
  return {Piece::Positive, from, to};
}

Rational round_down_dyadic(const Rational& x, std::uint64_t bits) {
  Integer scaled = floor(x * Rational(pow2(bits)));
  return make_rational(scaled, pow2(bits));
}

double down(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}
double up(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

// -log z, rounded outward; z is a dyadic with at most 53 significant bits.
double neg_log_down(const Rational& z) { return std::max(0.0, down(-std::log(z.get_d()), 4)); }
double neg_log_up(const Rational& z) {
  if (z <= 0) return std::numeric_limits<double>::infinity();
  return up(-std::log(z.get_d()), 4);
}

struct Prepared {
  std::vector<Integer> coeffs;
  bool tail;
  std::size_t unit_multiplicity = 0;
};

// A polynomial D is always taken whole, whatever N is.
Prepared prepare(const SymbolStream& K, std::size_t N) {
  Prepared p;
  p.tail = !kneading_determinant_is_polynomial(K);
  if (!p.tail) N = std::max(N, xi(K).digits.period().size());
  IntSeries D = kneading_determinant(K, N);
  p.coeffs = D.coefficients();
  if (!p.tail) {
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    // Divide out (1 - z) while D(1) = 0: roots at 1 do not affect h.
    auto sum = [&] {
      Integer s = 0;
      for (const auto& c : p.coeffs) s += c;
      return s;
    };
    while (p.coeffs.size() > 1 && sum() == 0) {
      std::vector<Integer> q(p.coeffs.size() - 1);
      q[0] = p.coeffs[0];
      for (std::size_t k = 1; k < q.size(); ++k) q[k] = p.coeffs[k] + q[k - 1];
      p.coeffs = std::move(q);
      ++p.unit_multiplicity;
    }
  }
  return p;
}

bool positive_on_unit_interval(const std::vector<Integer>& c) {
  Integer at_one = 0;
  for (const auto& x : c) at_one += x;
  return c[0] > 0 && at_one > 0 && descartes_unit_variations(c) == 0;
}

constexpr std::size_t kScanPieces = 64;
constexpr int kScanDepth = 24;
constexpr std::uint64_t kMaxBits = 52;

}  // namespace

std::size_t descartes_unit_variations(const std::vector<Integer>& ascending) {
  // x^n P(1/x) has the coefficients reversed; then substitute x -> x + 1.
  std::vector<Integer> r(ascending.rbegin(), ascending.rend());
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) r[k - 1] += r[k];
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : r) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

EntropyResult entropy(const SymbolStream& K, std::size_t N, double tolerance, double zero_margin) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!(zero_margin > 0 && zero_margin < 1)) throw std::invalid_argument("zero_margin must lie in (0,1)");
  Prepared prep = prepare(K, N);
  SignOracle D(prep.coeffs, prep.tail);

  EntropyResult result;
  result.certificate.order = N;
  result.certificate.polynomial = !prep.tail;
  result.certificate.unit_root_multiplicity = prep.unit_multiplicity;

  Rational limit = prep.tail ? round_down_dyadic(Rational(1 - zero_margin), 20) : Rational(1);
  std::vector<Rational> cover;
  Outcome first{Piece::Unknown, Rational(0), limit};
  if (!prep.tail && positive_on_unit_interval(prep.coeffs)) {
    first.kind = Piece::Positive;
    result.certificate.descartes_no_unit_root = true;
  } else {
    first = scan_range(D, Rational(0), limit, kScanPieces, kScanDepth, cover);
  }

  if (first.kind == Piece::Unknown) {
    throw EntropyInconclusive("cannot decide the sign of D near z = " + std::to_string(first.lo.get_d()) +
                              " at order " + std::to_string(N) + "; increase the order");
  }
  if (first.kind == Piece::Positive) {
    result.certificate.positive_up_to = limit;
    result.certificate.positive_cover = std::move(cover);
    result.certificate.interval_checks = D.checks();
    if (!prep.tail) {
      result.status = EntropyResult::Status::Zero;
      result.lo = result.hi = 0.0;
      result.z_lo = result.z_hi = 1;
    } else {
      result.status = EntropyResult::Status::BelowBound;
      result.lo = 0.0;
      result.hi = neg_log_up(limit);
      result.z_lo = limit;
      result.z_hi = 1;
    }
    return result;
  }

  Rational lo = first.lo, hi = first.hi;
  Rational neg_bound = *D.upper(hi);
  const Rational half_tol(tolerance / 2);
  while (lo == 0 || (hi - lo) / lo > half_tol) {
    Rational width = hi - lo;
    std::uint64_t bits = precision_of_width(width) + 4;
    if (bits > kMaxBits) break;
    bool moved = false;
    for (const Rational& frac : {Rational(1, 2), Rational(3, 8), Rational(5, 8)}) {
      Rational c = round_down_dyadic(lo + width * frac, bits);
      if (c <= lo || c >= hi) continue;
      if (auto u = D.upper(c); u && *u < 0) {
        hi = c;
        neg_bound = *u;
        moved = true;
        break;
      }
      Outcome o = scan(D, lo, c, 6, cover);
      if (o.kind == Piece::Positive) {
        lo = c;
        moved = true;
        break;
      }
      if (o.kind == Piece::Bracket) {
        lo = o.lo;
        hi = o.hi;
        neg_bound = *D.upper(hi);
        moved = true;
        break;
      }
      if (!cover.empty() && cover.back() > lo) {
        lo = cover.back();
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (lo == 0 || (hi - lo) / lo > half_tol) {
    throw EntropyInconclusive("root of D isolated only to [" + std::to_string(lo.get_d()) + ", " +
                              std::to_string(hi.get_d()) + "] at order " + std::to_string(N) +
                              "; increase the order or the tolerance");
  }
  if (!cover.empty() && cover.back() > lo && cover.back() < hi) lo = cover.back();
  result.status = EntropyResult::Status::Positive;
  result.z_lo = lo;
  result.z_hi = hi;
  result.lo = neg_log_down(hi);
  result.hi = neg_log_up(lo);
  result.certificate.positive_up_to = lo;
  result.certificate.positive_cover = std::move(cover);
  result.certificate.negative_at = hi;
  result.certificate.negative_value_bound = neg_bound;
  result.certificate.interval_checks = D.checks();
  return result;
}

bool verify_entropy_certificate(const SymbolStream& K, const EntropyResult& result) {
  const auto& cert = result.certificate;
  Prepared prep = prepare(K, cert.order);
  if (prep.tail == cert.polynomial) return false;
  SignOracle D(prep.coeffs, prep.tail);
  if (cert.negative_at) {
    auto u = D.upper(*cert.negative_at);
    if (!u || *u >= 0) return false;
  }
  if (cert.descartes_no_unit_root) {
    if (prep.tail || !positive_on_unit_interval(prep.coeffs)) return false;
  } else if (cert.positive_up_to > 0) {
    const auto& x = cert.positive_cover;
    if (x.empty() || x.back() != cert.positive_up_to) return false;
    Rational prev = 0;
    for (const auto& next : x) {
      if (next <= prev) return false;
      auto low = D.lower(prev, next);
      if (!low || *low <= 0) return false;
      prev = next;
    }
  }
  return true;
}

// -------------------------------------------------------------------- roots

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
  using cd = std::complex<double>;
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0.0) --deg;
  if (deg <= 1) return {};
  const std::size_t n = deg - 1;
  const double lead = coeffs[n];
  // Cauchy bound for the initial circle.
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(coeffs[k] / lead));
  radius = 1.0 + radius;
  double start = 0.0;
  for (std::size_t k = 0; k < n; ++k) start = std::max(start, std::pow(std::abs(coeffs[k] / lead), 1.0 / double(n - k)));
  start = std::min(start > 0 ? start : 1.0, radius);

  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * (double(k) + 0.25) / double(n) + 0.4;
    z[k] = std::polar(start, angle);
  }
  auto eval = [&](cd x, cd& dp) {
    cd p = coeffs[n];
    dp = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + coeffs[k];
    }
    return p;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double biggest = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      cd dp;
      cd p = eval(z[k], dp);
      if (p == cd(0.0)) continue;
      cd ratio = p / dp;
      cd sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != k) sum += 1.0 / (z[k] - z[i]);
      }
      cd step = ratio / (1.0 - ratio * sum);
      z[k] -= step;
      biggest = std::max(biggest, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (biggest < 1e-16) break;
  }
  return z;
}

std::vector<std::complex<double>> xi_partial_product_roots(unsigned j) {
  std::vector<std::complex<double>> roots;
  for (unsigned n = 0; n <= j; ++n) {
    std::vector<double> factor((std::size_t{1} << n) + 1, 0.0);
    factor.front() = 1.0;
    factor.back() = -1.0;
    auto r = polynomial_roots(factor);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  return roots;
}

std::vector<std::complex<double>> feigenbaum_zeta_roots(unsigned j) {
  auto roots = xi_partial_product_roots(j);
  std::vector<double> linear{1.0, -1.0};
  auto r = polynomial_roots(linear);
  roots.insert(roots.end(), r.begin(), r.end());
  return roots;
}

}  // namespace kneading
