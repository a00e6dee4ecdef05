// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kneading/cfrac.hpp"
#include "kneading/dynamics.hpp"
#include "kneading/encoding.hpp"
#include "kneading/feigenbaum.hpp"
#include "kneading/frequency.hpp"
#include "kneading/spectral.hpp"
#include "kneading/symbolic.hpp"
#include "oracles.hpp"

using namespace kneading;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<std::string()> run;  // empty string on success, reason otherwise
};

#define EXPECT(cond)                                   \
  do {                                                 \
    if (!(cond)) return std::string("failed: " #cond); \
  } while (0)

SymbolStream ep(const std::string& pre, const std::string& per) {
  return SymbolStream::eventually_periodic(BinaryWord::parse(pre), BinaryWord::parse(per));
}

std::vector<Integer> big(const std::vector<long>& v) { return {v.begin(), v.end()}; }

std::string tau_table() {
  const char* listed[] = {"2/3", "4/5", "14/17", "212/257", "54062/65537", "3542953172/4294967297",
                          "15216868001456509742/18446744073709551617"};
  for (unsigned j = 1; j <= 7; ++j) {
    EXPECT(to_string(tau_level(j).value()) == listed[j - 1]);
    std::string k = oracle::feigenbaum_word(std::size_t{1} << (j - 1));
    EXPECT(oracle::periodic_value(oracle::parities(k + k)) == tau_level(j).value());
  }
  return {};
}

std::string four_way() {
  for (unsigned j = 1; j <= 12; ++j) {
    TauLevel ref = tau_level(j, TauMethod::DigitRule);
    EXPECT(tau_level(j, TauMethod::PairSubstitution) == ref);
    EXPECT(tau_level(j, TauMethod::PqRecursion) == ref);
    EXPECT(tau_level(j, TauMethod::ClosedForm) == ref);
  }
  return {};
}

std::string fermat() {
  for (unsigned j = 1; j <= 12; ++j) {
    Integer q = 1;
    for (unsigned i = 0; i < (1u << (j - 1)); ++i) q *= 2;
    q += 1;
    EXPECT(fermat_denominator(j) == q);
    EXPECT(tau_level(j).q == q);
    EXPECT(fermat_denominator(j + 1) - 1 == (q - 1) * (q - 1));
  }
  return {};
}

std::string cf_tables() {
  const char* listed[] = {
      "[1,2]",
      "[1,4]",
      "[1,4,1,2]",
      "[1,4,1,2,2,6]",
      "[1,4,1,2,2,6,2,1,2,9,1,2]",
      "[1,4,1,2,2,6,2,1,2,9,1,2,2,1,1,21,1,10,2,1,1,1,5]",
      "[1,4,1,2,2,6,2,1,2,9,1,2,2,1,1,21,1,10,2,1,1,1,4,1,2,29,1,24,1,1,7,11,3,2,5,1,1,1,89]",
      "[1,4,1,2,2,6,2,1,2,9,1,2,2,1,1,21,1,10,2,1,1,1,4,1,2,29,1,24,1,1,7,11,3,2,5,1,1,1,88,1,1,1,6,1,1,33,2,6,"
      "1,24,1,5,212,2,1,10,1,3,11,2,1,2,1,10,1,1,2,3,2549,1,2]"};
  const std::size_t n[] = {2, 2, 4, 6, 12, 23, 39, 71, 121, 253, 528, 1129};
  auto table = cf_table(12);
  EXPECT(table.size() == 12);
  for (unsigned j = 1; j <= 12; ++j) {
    const CfRow& row = table[j - 1];
    EXPECT(row.j == j);
    EXPECT(row.n == n[j - 1]);
    EXPECT(oracle::join(oracle::continued_fraction(tau_level(j).value())) == row.cf.to_string());
    if (j <= 8) EXPECT(row.cf.to_string() == listed[j - 1]);
  }
  return {};
}

std::string xi_checks() {
  EXPECT(to_string(xi_series(16)) ==
         "1 - z - z^2 + z^3 - z^4 + z^5 + z^6 - z^7 - z^8 + z^9 + z^10 - z^11 + z^12 - z^13 - z^14 + z^15 - z^16");
  const std::size_t N = std::size_t{1} << 12;
  IntSeries x = xi_series(N);
  std::string t = oracle::parities(oracle::feigenbaum_word(N));
  for (std::size_t k = 1; k <= N; ++k) EXPECT(x[k] == 1 - 2 * (t[k - 1] - '0'));
  EXPECT(x.coefficients() == big(oracle::xi_product(N)));
  EXPECT(xi_functional_residual(1024).is_zero());
  return {};
}

std::string tau_infinity_value() {
  DyadicEnclosure a = tau_infinity_enclosure(100, EnclosureMethod::ProductFormula);
  DyadicEnclosure b = tau_infinity_enclosure(100, EnclosureMethod::DigitSum);
  auto both = intersect(a, b);
  EXPECT(both.has_value());
  EXPECT(both->width() <= inv_pow2(100));
  // Truncated digit sum from the substitution word.
  oracle::Q lo = oracle::dyadic_value(oracle::parities(oracle::feigenbaum_word(160)));
  EXPECT(both->lo <= lo + inv_pow2(160));
  EXPECT(lo <= both->hi);
  DyadicEnclosure c = xi_half_enclosure(100);
  EXPECT(intersect(*both, c).has_value());
  return {};
}

std::string zeta_closed_forms() {
  const std::size_t N = 30;
  EXPECT(zeta_series(kneading_of_tau(1), N).coefficients() == oracle::divide({1}, {1, -2}, N));
  EXPECT(zeta_series(kneading_of_tau(Rational(5, 6)), N).coefficients() ==
         oracle::divide({1, 1}, oracle::multiply({1, -1}, {1, 0, -2}, N), N));
  EXPECT(zeta_series(kneading_of_tau(Rational(6, 7)), N).coefficients() ==
         oracle::divide({1}, oracle::multiply({1, -1}, {1, -1, -1}, N), N));
  return {};
}

std::string entropies() {
  const double tol = 1e-10;
  struct Case {
    Rational tau;
    double h;
  };
  const Case cases[] = {{Rational(1), std::log(2.0)},
                        {Rational(5, 6), 0.5 * std::log(2.0)},
                        {Rational(6, 7), std::log((1 + std::sqrt(5.0)) / 2)}};
  for (const Case& c : cases) {
    SymbolStream K = kneading_of_tau(c.tau);
    EntropyResult e = entropy(K, 256, tol);
    EXPECT(e.status == EntropyResult::Status::Positive);
    EXPECT(e.lo <= c.h && c.h <= e.hi);
    EXPECT(e.hi - e.lo <= tol);
    EXPECT(verify_entropy_certificate(K, e));
  }
  for (unsigned j = 1; j <= 10; ++j) {
    EntropyResult e = entropy(feigenbaum_K_stream(j), 16, tol);
    EXPECT(e.status == EntropyResult::Status::Zero);
    EXPECT(e.lo == 0.0 && e.hi == 0.0);
    EXPECT(verify_entropy_certificate(feigenbaum_K_stream(j), e));
  }
  return {};
}

std::string orbit_count_checks() {
  OrbitCounts full = orbit_counts(zeta_series(kneading_of_tau(1), 10));
  for (unsigned n = 1; n <= 10; ++n) EXPECT(full.per_counts[n] == Integer(1) << n);
  const SymbolStream K = ep("", "101");
  OrbitCounts oc = orbit_counts(zeta_series(K, 12));
  for (unsigned n = 1; n <= 12; ++n) {
    // Periodic words w with every shift of w^∞ at most K in the τ order,
    // compared through exact rationals.
    const Rational top = oracle::periodic_value(oracle::parities(oracle::repeat("101", 6)));
    Integer count = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      std::string word;
      for (unsigned i = 0; i < n; ++i) word += char('0' + ((w >> (n - 1 - i)) & 1));
      bool ok = true;
      for (unsigned m = 0; m < n && ok; ++m) {
        std::string rot = word.substr(m) + word.substr(0, m);
        std::string t = oracle::parities(rot + rot);
        // the digits of w^∞ repeat with period 2n, or n when the popcount is even
        ok = oracle::periodic_value(t) <= top;
      }
      if (ok) ++count;
    }
    EXPECT(oc.per_counts[n] == count);
  }
  return {};
}

std::string frequencies() {
  IncidenceMatrix m = incidence(feigenbaum_substitution());
  EXPECT(m.entries == (IntMatrix{{0, 1}, {2, 1}}));
  LetterFrequencies f = letter_frequencies(feigenbaum_substitution());
  EXPECT(f.eigenvalues == (std::vector<Integer>{2, -1}));
  EXPECT(f.frequencies == (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
  const std::vector<Rational> pairs{Rational(1, 3), Rational(1, 6), Rational(1, 6), Rational(1, 3)};
  EXPECT(letter_frequencies(pair_substitution()).frequencies == pairs);
  // Aligned pair counts over the first 2^20 digits from the oracle word.
  const std::size_t N = std::size_t{1} << 20;
  std::string t = oracle::parities(oracle::feigenbaum_word(N));
  std::vector<long> count(4, 0);
  for (std::size_t i = 0; i + 1 < N; i += 2) ++count[(t[i] - '0') * 2 + (t[i + 1] - '0')];
  std::vector<Rational> measured;
  for (long c : count) measured.push_back(oracle::frac(c, long(N / 2)));
  EXPECT(empirical_frequencies(tau_infinity_digits().digits, 2, N, BlockAlignment::Aligned) == measured);
  for (std::size_t i = 0; i < 4; ++i) EXPECT(abs(measured[i] - pairs[i]) <= inv_pow2(8));
  return {};
}

std::string tower() {
  std::string kinf = oracle::feigenbaum_word(std::size_t{1} << 16);
  for (unsigned j = 1; j <= 14; ++j) {
    BinaryWord ref = feigenbaum_K(j, KMethod::DuplicateFlip);
    EXPECT(feigenbaum_K(j, KMethod::IndexDoubling) == ref);
    EXPECT(feigenbaum_K(j, KMethod::Substitution) == ref);
    EXPECT(ref.to_string() == kinf.substr(0, ref.size()));
    EXPECT(ref.popcount() % 2 == 1);
    if (j <= 13) EXPECT(renormalize_seq(feigenbaum_K_stream(j + 1)) == feigenbaum_K_stream(j));
  }
  BinaryWord k = feigenbaum_K_infinity().prefix(kinf.size());
  EXPECT(k.to_string() == kinf);
  for (std::size_t i = 1; i <= kinf.size(); i += 2) EXPECT(k.at(i) == 1);
  for (std::size_t i = 2; i <= kinf.size(); i += 4) EXPECT(k.at(i) == 0);
  return {};
}

std::string thue_morse() {
  const std::size_t n = std::size_t{1} << 16;
  EXPECT(thue_morse_check(n));
  BinaryWord w = BinaryWord::parse("0" + oracle::feigenbaum_word(n - 1));
  std::string got = xi(w).to_string();
  for (std::size_t i = 0; i < n; ++i) EXPECT(got[i] == oracle::thue_morse(i));
  return {};
}

std::string odd_part_digits() {
  const std::size_t n = std::size_t{1} << 16;
  std::string t = oracle::parities(oracle::feigenbaum_word(n));
  for (std::uint64_t k = 1; k <= n; ++k) EXPECT(tau_infinity_digit(k) == t[k - 1] - '0');
  EXPECT(xi(feigenbaum_K_infinity()).prefix(n).to_string() == t);
  return {};
}

std::string numeric_validation() {
  for (const UnimodalMap& f : {logistic_map(3.9), tent_map(2.0)}) {
    OrderReport r = order_preservation_check(f, 1000, 40, 20240601);
    EXPECT(r.decided == 1000);
    EXPECT(r.violations == 0);
  }
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(3.2, 3.58);
  for (int i = 0; i < 10; ++i) {
    UnimodalMap f = logistic_map(u(rng));
    Itinerary kf = kneading::kneading(f, 64), kr = kneading::kneading(renormalize_map(f).map, 32);
    std::size_t m = std::min(kf.reliable_prefix() / 2, kr.reliable_prefix());
    EXPECT(m >= 8);
    // ŝ_{2i} read straight off the kneading word of f
    for (std::size_t i2 = 1; i2 <= m; ++i2) EXPECT(kr.symbols.at(i2) == 1 - kf.symbols.at(2 * i2));
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "tau table", 1, tau_table},
      {2, "four-way tau construction, j <= 12", 10, four_way},
      {3, "Fermat denominators, j <= 12", 1, fermat},
      {4, "continued fraction tables and n_j", 60, cf_tables},
      {5, "Xi series", 10, xi_checks},
      {6, "tau_inf = 1 - Xi(1/2)/2 at 2^-100", 5, tau_infinity_value},
      {7, "zeta closed forms through order 30", 1, zeta_closed_forms},
      {8, "entropy enclosures and h(tau_j) = 0", 10, entropies},
      {9, "orbit counts", 60, orbit_count_checks},
      {10, "letter and pair frequencies", 30, frequencies},
      {11, "symbolic tower", 30, tower},
      {12, "Thue-Morse relation on 2^16 symbols", 5, thue_morse},
      {13, "tau_inf digits from odd parts, k <= 2^16", 5, odd_part_digits},
      {14, "order preservation and renormalization commutation", 60, numeric_validation},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > c.limit_seconds) reason = "over time limit";
    bool ok = reason.empty();
    failures += !ok;
    std::printf("%s %2d %-52s %8.3f s (limit %g s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_seconds, ok ? "" : "  ", reason.c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
