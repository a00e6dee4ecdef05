#include <doctest.h>

#include "kneading/feigenbaum.hpp"
#include "oracles.hpp"

using namespace kneading;

namespace {

// τ_j from the listed K_j word: digits = parities of K_j repeated twice.
Rational tau_from_word(unsigned j) {
  std::string k = oracle::feigenbaum_word(std::size_t{1} << (j - 1));
  return oracle::periodic_value(oracle::parities(k + k));
}

}  // namespace

TEST_CASE("tau_j listing") {
  const char* listed[] = {"2/3", "4/5", "14/17", "212/257", "54062/65537", "3542953172/4294967297",
                          "15216868001456509742/18446744073709551617"};
  for (unsigned j = 1; j <= 7; ++j) CHECK(to_string(tau_level(j).value()) == listed[j - 1]);
  CHECK(tau_level(3).period_digits.to_string() == "11010010");
  CHECK(tau_level(4).period_digits.to_string() == "1101001100101100");
  CHECK(tau_level(5).period_digits.to_string() == "11010011001011010010110011010010");
}

TEST_CASE("four constructions agree with each other and with the oracle") {
  for (unsigned j = 1; j <= 12; ++j) {
    TauLevel ref = tau_level(j, TauMethod::DigitRule);
    CHECK(tau_level(j, TauMethod::PairSubstitution) == ref);
    CHECK(tau_level(j, TauMethod::PqRecursion) == ref);
    CHECK(tau_level(j, TauMethod::ClosedForm) == ref);
    CHECK(ref.value() == tau_from_word(j));
    CHECK(ref.period_digits.size() == (std::size_t{1} << j));
  }
}

TEST_CASE("Fermat denominators") {
  for (unsigned j = 1; j <= 12; ++j) {
    Integer q = 1;
    q <<= (1u << (j - 1));
    q += 1;
    CHECK(fermat_denominator(j) == q);
    CHECK(tau_level(j).q == q);
    if (j >= 2) CHECK(fermat_denominator(j) - 1 == (fermat_denominator(j - 1) - 1) * (fermat_denominator(j - 1) - 1));
  }
}

TEST_CASE("digit rule and monotonicity") {
  for (unsigned j = 1; j < 12; ++j) {
    BinaryWord a = tau_level(j).period_digits, b = tau_level(j + 1).period_digits;
    const std::size_t n = a.size();
    CHECK(a.prefix(n - 1).is_prefix_of(b));
    CHECK(b.at(n) != a.at(n));
    CHECK(tau_level(j).value() < tau_level(j + 1).value());
  }
}

TEST_CASE("tau difference") {
  CHECK(tau_difference(1) == Rational(2, 15));
  // 14/17 - 4/5 and 212/257 - 14/17 by direct subtraction.
  CHECK(tau_difference(2) == oracle::frac(14, 17) - oracle::frac(4, 5));
  CHECK(tau_difference(2) == Rational(2, 85));
  CHECK(tau_difference(3) == Rational(6, 4369));
  for (unsigned j = 1; j <= 10; ++j) {
    Integer f = 1;
    f <<= (1u << j);
    f += 1;
    CHECK(tau_difference(j) == 2 * (1 - tau_level(j).value()) / Rational(f));
  }
}

TEST_CASE("tau_infinity digits") {
  const int first[] = {1, 1, 0, 1, 0, 0, 1, 1};
  for (std::uint64_t k = 1; k <= 8; ++k) CHECK(tau_infinity_digit(k) == first[k - 1]);
  for (unsigned l = 0; l <= 30; ++l) CHECK(tau_infinity_digit(std::uint64_t{1} << l) == 1);
  CHECK(tau_infinity_digit(3 << 10) == 0);
  CHECK(tau_level(13).period_digits.at(3 << 10) == 0);
  // Bytes 11010011 00101101 00101100 11010011.
  CHECK(tau_infinity_digits().prefix(32).to_string() == "11010011001011010010110011010011");
}

TEST_CASE("tau_infinity digits are the limit of the tau_j digits and of xi(K_inf)") {
  std::string t = oracle::parities(oracle::feigenbaum_word(1 << 14));
  for (std::uint64_t k = 1; k <= (1 << 14); ++k) REQUIRE(tau_infinity_digit(k) == t[k - 1] - '0');
  for (unsigned j = 1; j <= 13; ++j) {
    BinaryWord d = tau_level(j).period_digits;
    for (std::uint64_t k = 1; k < d.size() && k <= 4096; ++k) REQUIRE(d.at(k) == tau_infinity_digit(k));
  }
}

TEST_CASE("tau_infinity enclosures") {
  DyadicEnclosure e8 = tau_infinity_enclosure(8, EnclosureMethod::DigitSum);
  CHECK(e8.lo == Rational(211, 256));
  for (std::uint64_t bits : {8, 64, 100, 300}) {
    DyadicEnclosure a = tau_infinity_enclosure(bits, EnclosureMethod::DigitSum);
    DyadicEnclosure b = tau_infinity_enclosure(bits, EnclosureMethod::ProductFormula);
    CHECK(a.width() <= inv_pow2(bits));
    CHECK(b.width() <= inv_pow2(bits));
    auto both = intersect(a, b);
    REQUIRE(both.has_value());
    CHECK(both->width() <= inv_pow2(bits));
  }
  DyadicEnclosure e = tau_infinity_enclosure(1 << 12, EnclosureMethod::ProductFormula);
  for (unsigned j = 1; j <= 11; ++j) CHECK(e.lo > tau_level(j).value());
}

TEST_CASE("renormalize_tau") {
  TDigits t3{SymbolStream::periodic(tau_level(3).period_digits)};
  TDigits t2{SymbolStream::periodic(tau_level(2).period_digits)};
  CHECK(renormalize_tau(t3).digits == t2.digits);
  CHECK(renormalize_tau(tau_infinity_digits()).prefix(4096) == tau_infinity_digits().prefix(4096));
  CHECK(renormalize_tau(TDigits{SymbolStream::periodic(BinaryWord::parse("11"))}).digits ==
        SymbolStream::periodic(BinaryWord::parse("1")));
}

TEST_CASE("Thue-Morse check") {
  CHECK(thue_morse_check(1));
  CHECK(thue_morse_check(8));
  CHECK(thue_morse_check(1 << 16));
  std::string u = oracle::feigenbaum_word(7);
  std::string tm;
  for (std::uint64_t n = 0; n < 8; ++n) tm += oracle::thue_morse(n);
  CHECK(oracle::parities("0" + u) == tm);
}

TEST_CASE("ones have frequency one half in tau_infinity") {
  BinaryWord d = tau_infinity_digits().prefix(1 << 20);
  double f = double(d.popcount()) / double(d.size());
  CHECK(std::abs(f - 0.5) < 20.0 / double(1 << 20));
}

TEST_CASE("level json") {
  auto j = to_json(tau_level(2));
  CHECK(j["p"] == "4");
  CHECK(j["q"] == "5");
  CHECK(j["digits"] == "1100");
}
