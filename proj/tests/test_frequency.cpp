#include <doctest.h>

#include <random>

#include "kneading/feigenbaum.hpp"
#include "kneading/frequency.hpp"

using namespace kneading;

namespace {

Integer det3(const IntMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Integer eval(const std::vector<Integer>& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [a, b] : v) out.push_back(Rational(a, b));
  return out;
}

}  // namespace

TEST_CASE("incidence matrices") {
  IncidenceMatrix m = incidence(feigenbaum_substitution());
  CHECK(m.entries == IntMatrix{{0, 1}, {2, 1}});
  CHECK(incidence(thue_morse_substitution()).entries == IntMatrix{{1, 1}, {1, 1}});
  IncidenceMatrix pair = incidence(pair_substitution());
  REQUIRE(pair.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < 4; ++i) sum += pair.entries[i][j];
    CHECK(sum == 2);
  }
}

TEST_CASE("counted powers agree with matrix powers") {
  for (const auto& rule : {feigenbaum_substitution(), thue_morse_substitution(), pair_substitution()}) {
    IntMatrix m = incidence(rule).entries;
    for (unsigned n = 0; n <= 10; ++n) CHECK(counted_power(rule, n) == matrix_power(m, n));
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(characteristic_polynomial({{0, 1}, {2, 1}}) == std::vector<Integer>{-2, -1, 1});
  CHECK(integer_eigenvalues({{0, 1}, {2, 1}}) == std::vector<Integer>{2, -1});
  CHECK(integer_eigenvalues({{1, 1}, {1, 1}}) == std::vector<Integer>{2, 0});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(3, std::vector<Integer>(3));
    for (auto& row : m)
      for (auto& x : row) x = long(rng() % 11) - 5;
    auto p = characteristic_polynomial(m);
    REQUIRE(p.size() == 4);
    CHECK(p[3] == 1);
    CHECK(p[0] == -det3(m));
    CHECK(p[2] == -(m[0][0] + m[1][1] + m[2][2]));
    for (const Integer& e : integer_eigenvalues(m)) CHECK(eval(p, e) == 0);
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive({{0, 1}, {2, 1}}));
  CHECK(is_primitive({{1, 1}, {1, 1}}));
  CHECK_FALSE(is_primitive({{0, 1}, {1, 0}}));
  CHECK_FALSE(is_primitive({{2, 1}, {0, 1}}));
  CHECK(is_primitive(incidence(pair_substitution()).entries));
  SubstitutionRule reducible("01", {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(letter_frequencies(reducible), std::domain_error);
}

TEST_CASE("exact letter frequencies") {
  LetterFrequencies f = letter_frequencies(feigenbaum_substitution());
  CHECK(f.eigenvalue == 2);
  CHECK(f.eigenvalues == std::vector<Integer>{2, -1});
  CHECK(f.frequencies == q({{1, 3}, {2, 3}}));
  CHECK(letter_frequencies(thue_morse_substitution()).frequencies == q({{1, 2}, {1, 2}}));
  LetterFrequencies p = letter_frequencies(pair_substitution());
  CHECK(p.frequencies == q({{1, 3}, {1, 6}, {1, 6}, {1, 3}}));
  // M v = λ v
  IntMatrix m = incidence(pair_substitution()).entries;
  for (std::size_t i = 0; i < 4; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < 4; ++j) row += Rational(m[i][j]) * p.frequencies[j];
    CHECK(row == Rational(p.eigenvalue) * p.frequencies[i]);
  }
}

TEST_CASE("empirical frequencies") {
  const std::size_t N = std::size_t{1} << 20;
  auto letters = empirical_frequencies(feigenbaum_K_infinity(), 1, N);
  CHECK(max_deviation(letters, q({{1, 3}, {2, 3}})) <= inv_pow2(8));
  auto pairs = empirical_frequencies(tau_infinity_digits().digits, 2, N, BlockAlignment::Aligned);
  CHECK(max_deviation(pairs, q({{1, 3}, {1, 6}, {1, 6}, {1, 3}})) <= inv_pow2(8));
  auto alt = empirical_frequencies(SymbolStream::periodic(BinaryWord::parse("10")), 1, 1000);
  CHECK(alt == q({{1, 2}, {1, 2}}));
  auto tm = empirical_frequencies(thue_morse_stream(), 1, 1 << 12);
  CHECK(tm == q({{1, 2}, {1, 2}}));
  CHECK_THROWS(empirical_frequencies(thue_morse_stream(), 17, 100));
}

TEST_CASE("normality report") {
  NormalityReport big = normality_report(std::size_t{1} << 20);
  CHECK(big.deviation_from_uniform >= Rational(1, 15));
  CHECK(big.deviation_from_predicted <= inv_pow2(8));
  CHECK(big.non_normal());
  CHECK(big.predicted == q({{1, 3}, {1, 6}, {1, 6}, {1, 3}}));
  CHECK(normality_report(1 << 10).non_normal());
  NormalityReport tiny = normality_report(4);
  CHECK(tiny.prefix == 4);
}

TEST_CASE("frequency convergence") {
  auto rows = frequency_convergence(8, 16);
  REQUIRE(rows.size() == 9);
  CHECK(rows.front().prefix == 256);
  CHECK(rows.back().deviation <= rows.front().deviation);
  for (const auto& r : rows) CHECK(r.deviation <= Rational(1, 8));
}
