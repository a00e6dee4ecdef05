#include <doctest.h>

#include <cmath>
#include <set>

#include "kneading/encoding.hpp"
#include "kneading/feigenbaum.hpp"
#include "kneading/language.hpp"
#include "kneading/spectral.hpp"
#include "oracles.hpp"

using namespace kneading;

namespace {

SymbolStream ep(const std::string& pre, const std::string& per) {
  return SymbolStream::eventually_periodic(BinaryWord::parse(pre), BinaryWord::parse(per));
}

std::set<std::string> as_set(const std::vector<BinaryWord>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.to_string());
  return out;
}

double growth(std::uint64_t p, std::size_t n) { return std::log(double(p)) / double(n); }

}  // namespace

TEST_CASE("full shift") {
  for (LanguageMode mode : {LanguageMode::Core, LanguageMode::Full}) {
    auto p = complexity({ep("1", "0"), 12, mode});
    for (std::size_t n = 1; n <= 12; ++n) CHECK(p[n - 1] == std::uint64_t{1} << n);
  }
  CHECK(admissible_words({ep("1", "0"), 3, LanguageMode::Full}, 3).size() == 8);
}

TEST_CASE("golden mean growth for 6/7") {
  const double h = std::log((1 + std::sqrt(5.0)) / 2);
  for (LanguageMode mode : {LanguageMode::Core, LanguageMode::Full}) {
    auto p = complexity({ep("", "101"), 20, mode});
    CHECK(std::abs(growth(p[19], 20) - h) < 0.05);
    double prev = 1e9;
    for (std::size_t n : {8, 12, 16, 20}) {
      double d = std::abs(growth(p[n - 1], n) - h);
      CHECK(d < prev);
      prev = d;
    }
  }
  auto full = complexity({ep("1", "0"), 20, LanguageMode::Full});
  double prev = 1e9;
  for (std::size_t n : {8, 12, 16, 20}) {
    double d = std::abs(growth(full[n - 1], n) - std::log(2.0));
    CHECK(d <= prev);
    prev = d;
  }
}

TEST_CASE("Feigenbaum levels have subexponential complexity") {
  for (unsigned j = 1; j <= 6; ++j) {
    auto p = complexity({feigenbaum_K_stream(j), 28, LanguageMode::Core});
    for (std::size_t n = 1; n <= 28; ++n) {
      double bound = 1;
      for (unsigned e = 1; e < j; ++e) bound *= double(n + 1);
      CHECK(double(p[n - 1]) <= bound);
    }
    double prev = 1e9;
    for (std::size_t n : {8, 12, 16, 20, 24, 28}) {
      CHECK(growth(p[n - 1], n) <= prev);
      prev = growth(p[n - 1], n);
    }
    CHECK(growth(p[19], 20) < 0.3);
  }
  auto p = complexity({feigenbaum_K_infinity(), 28, LanguageMode::Core});
  CHECK(growth(p[27], 28) < growth(p[15], 16));
  // Every factor of K_∞ itself lies in the core language.
  std::string k = oracle::feigenbaum_word(1 << 12);
  for (std::size_t n : {4, 9, 13}) {
    auto words = as_set(admissible_words({feigenbaum_K_infinity(), n, LanguageMode::Core}, n));
    for (std::size_t i = 1; i + n < k.size(); ++i) REQUIRE(words.count(k.substr(i, n)) == 1);
  }
}

TEST_CASE("languages are factorial and extendable") {
  for (const SymbolStream& K : {ep("", "101"), ep("10", "1"), feigenbaum_K_stream(4), feigenbaum_K_infinity()}) {
    for (LanguageMode mode : {LanguageMode::Core, LanguageMode::Full}) {
      LanguageQuery q{K, 10, mode};
      for (std::size_t n = 1; n < 10; ++n) {
        auto shorter = as_set(admissible_words(q, n));
        auto longer = admissible_words(q, n + 1);
        std::set<std::string> prefixes;
        for (const auto& w : longer) {
          std::string s = w.to_string();
          CHECK(shorter.count(s.substr(0, n)) == 1);
          CHECK(shorter.count(s.substr(1)) == 1);
          prefixes.insert(s.substr(0, n));
        }
        CHECK(prefixes == shorter);
        CHECK(shorter.size() == complexity(q)[n - 1]);
      }
    }
  }
}

TEST_CASE("core language is contained in the full language") {
  for (const SymbolStream& K : {ep("", "101"), ep("10", "1"), feigenbaum_K_stream(3)}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      auto core = as_set(admissible_words({K, n, LanguageMode::Core}, n));
      auto full = as_set(admissible_words({K, n, LanguageMode::Full}, n));
      for (const auto& w : core) CHECK(full.count(w) == 1);
    }
  }
}

TEST_CASE("forbidden words") {
  auto f = forbidden_words(binary_expansion(Rational(6, 7)), 3);
  REQUIRE(f.size() == 1);
  CHECK(f[0].to_string() == "100");
  for (const auto& w : admissible_words({ep("", "101"), 3, LanguageMode::Core}, 3)) CHECK(w.to_string() != "100");
  for (const Rational& tau : {Rational(6, 7), Rational(5, 6), tau_level(4).value()}) {
    SymbolStream K = kneading_of_tau(tau);
    auto forbidden = forbidden_words(binary_expansion(tau), 12);
    for (const auto& w : admissible_words({K, 12, LanguageMode::Full}, 12))
      for (const auto& bad : forbidden) CHECK_FALSE(contains_factor(w, bad));
  }
  CHECK(forbidden_words(binary_expansion(Rational(1)), 20).empty());
  CHECK(contains_factor(BinaryWord::parse("0110"), BinaryWord::parse("11")));
  CHECK_FALSE(contains_factor(BinaryWord::parse("0110"), BinaryWord::parse("00")));
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(complexity({ep("", "01"), 5, LanguageMode::Core}), std::invalid_argument);
  CHECK_THROWS_AS(complexity({ep("1", "0"), kMaxLanguageLength + 1, LanguageMode::Full}), EnumerationTooLarge);
  CHECK_THROWS_AS(complexity({ep("1", "0"), 30, LanguageMode::Full}), EnumerationTooLarge);
}
