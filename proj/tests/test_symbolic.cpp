#include <doctest.h>

#include <random>
#include <thread>

#include "kneading/symbolic.hpp"
#include "oracles.hpp"

using namespace kneading;

namespace {

SymbolStream ep(const char* pre, const char* per) {
  return SymbolStream::eventually_periodic(BinaryWord::parse(pre), BinaryWord::parse(per));
}

}  // namespace

TEST_CASE("binary words") {
  BinaryWord w = BinaryWord::parse("10110");
  CHECK(w.size() == 5);
  CHECK(w.at(1) == 1);
  CHECK(w.at(2) == 0);
  CHECK(w.popcount() == 3);
  CHECK(w.prefix(3).to_string() == "101");
  CHECK(w.drop(2).to_string() == "110");
  CHECK(w.complement().to_string() == "01001");
  CHECK(w.flipped(5).to_string() == "10111");
  CHECK(BinaryWord::parse("101").is_prefix_of(w));
  CHECK_THROWS_AS(BinaryWord::parse("102"), std::invalid_argument);
  CHECK_THROWS(w.at(0));
  CHECK_THROWS(w.at(6));
}

TEST_CASE("streams are stored canonically") {
  SymbolStream s = ep("1010", "1010");
  CHECK(s.is_periodic());
  CHECK(s.period().to_string() == "10");
  SymbolStream t = ep("01", "11");
  CHECK(t.preperiod().to_string() == "0");
  CHECK(t.period().to_string() == "1");
  CHECK(ep("", "0110") == ep("0", "1100"));
  CHECK_THROWS(ep("1", ""));
  for (std::uint64_t k = 1; k <= 12; ++k) CHECK(s.at(k) == (k % 2 == 1 ? 1 : 0));
}

TEST_CASE("shift") {
  CHECK(shift(SymbolStream::periodic(BinaryWord::parse("10")), 1) == SymbolStream::periodic(BinaryWord::parse("01")));
  CHECK(shift(ep("1", "0"), 1) == SymbolStream::periodic(BinaryWord::parse("0")));
  std::string kinf = oracle::feigenbaum_word(8);
  CHECK(kinf == "10111010");
  CHECK(shift(feigenbaum_K_infinity(), 2).prefix(6).to_string() == kinf.substr(2, 6));
  CHECK(shift(feigenbaum_K_infinity(), 2).prefix(6).to_string() == "111010");
}

TEST_CASE("substitution") {
  auto phi = feigenbaum_substitution();
  CHECK(substitute(phi, BinaryWord::parse("1")).to_string() == "10");
  CHECK(substitute(phi, BinaryWord::parse("10")).to_string() == "1011");
  CHECK(substitute(phi, BinaryWord()).empty());
  CHECK(fixed_point_prefix(phi, 1, 8).to_string() == "10111010");
  CHECK(fixed_point_prefix(phi, 1, 4).to_string() == "1011");
  CHECK(fixed_point_prefix(thue_morse_substitution(), 0, 8).to_string() == "01101001");
  // 0 -> 11 does not start with 0.
  CHECK_THROWS_AS(fixed_point_prefix(phi, 0, 8), std::logic_error);
  SubstitutionRule shrink("01", {{0}, {1, 0}});
  CHECK_THROWS_AS(fixed_point_prefix(shrink, 0, 8), std::logic_error);
}

TEST_CASE("fixed point prefixes are stable") {
  auto phi = feigenbaum_substitution();
  BinaryWord big = fixed_point_prefix(phi, 1, 5000);
  CHECK(big.to_string() == oracle::feigenbaum_word(5000));
  for (std::size_t n : {1, 2, 7, 64, 999, 4096}) CHECK(fixed_point_prefix(phi, 1, n).is_prefix_of(big));
  auto pair = pair_substitution();
  Word w = fixed_point_prefix_word(pair, 3, 256);
  Word img = substitute(pair, w);
  CHECK(std::equal(w.begin(), w.end(), img.begin()));
}

TEST_CASE("renormalize_seq") {
  CHECK(renormalize_seq(feigenbaum_K_stream(3)) == feigenbaum_K_stream(2));
  CHECK(renormalize_seq(SymbolStream::periodic(BinaryWord::parse("11"))) ==
        SymbolStream::periodic(BinaryWord::parse("0")));
  SymbolStream k = feigenbaum_K_infinity();
  CHECK(renormalize_seq(k).prefix(64) == k.prefix(64));
  // ŝ_2 ŝ_4 … against the oracle word
  std::string w = oracle::feigenbaum_word(400);
  BinaryWord r = renormalize_seq(k).prefix(200);
  for (std::size_t i = 1; i <= 200; ++i) CHECK(r.at(i) == 1 - (w[2 * i - 1] - '0'));
}

TEST_CASE("K_j listings and the three constructions") {
  CHECK(feigenbaum_K(1).to_string() == "1");
  CHECK(feigenbaum_K(2).to_string() == "10");
  CHECK(feigenbaum_K(3).to_string() == "1011");
  CHECK(feigenbaum_K(4).to_string() == "10111010");
  CHECK(feigenbaum_K(5).to_string() == "1011101010111011");
  for (unsigned j = 1; j <= 14; ++j) {
    BinaryWord ref = feigenbaum_K(j, KMethod::DuplicateFlip);
    CHECK(ref.size() == (std::size_t{1} << (j - 1)));
    CHECK(ref.popcount() % 2 == 1);
    CHECK(feigenbaum_K(j, KMethod::IndexDoubling) == ref);
    CHECK(feigenbaum_K(j, KMethod::Substitution) == ref);
  }
  std::string kinf = oracle::feigenbaum_word(1 << 14);
  for (unsigned j = 1; j <= 13; ++j) {
    BinaryWord a = feigenbaum_K(j), b = feigenbaum_K(j + 1);
    CHECK(a.is_prefix_of(b));
    CHECK(b.to_string() == kinf.substr(0, b.size()));
    CHECK(renormalize_seq(feigenbaum_K_stream(j + 1)) == feigenbaum_K_stream(j));
  }
}

TEST_CASE("K_infinity has 1 at odd indices and 0 at indices 2 mod 4, up to 2^16") {
  BinaryWord k = feigenbaum_K_infinity().prefix(1 << 16);
  bool odd_ones = true, fours = true;
  for (std::size_t i = 1; i <= k.size(); i += 2) odd_ones = odd_ones && k.at(i) == 1;
  for (std::size_t i = 2; i <= k.size(); i += 4) fours = fours && k.at(i) == 0;
  CHECK(odd_ones);
  CHECK(fours);
}

TEST_CASE("decimate") {
  SymbolStream s = SymbolStream::periodic(BinaryWord::parse("0110"));
  CHECK(decimate(s, false) == SymbolStream::periodic(BinaryWord::parse("10")));
  CHECK(decimate(s, true) == SymbolStream::periodic(BinaryWord::parse("01")));
}

TEST_CASE("lazy streams are safe to share between threads") {
  SymbolStream k = feigenbaum_K_infinity();
  std::string expect = oracle::feigenbaum_word(1 << 15);
  std::vector<std::thread> pool;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      std::size_t n = std::size_t{1} << (8 + t);
      ok[t] = k.prefix(n).to_string() == expect.substr(0, n);
    });
  }
  for (auto& th : pool) th.join();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("json round trip") {
  for (const SymbolStream& s : {ep("1", "0"), ep("", "1011"), feigenbaum_K_infinity(), thue_morse_stream()}) {
    SymbolStream back = stream_from_json(to_json(s));
    CHECK(back.prefix(300) == s.prefix(300));
  }
  CHECK(to_json(ep("1", "10")) == nlohmann::json{{"preperiod", "1"}, {"period", "10"}});
}

TEST_CASE("random eventually periodic streams agree with their construction") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::string pre, per;
    std::size_t lp = rng() % 5, lq = 1 + rng() % 6;
    for (std::size_t i = 0; i < lp; ++i) pre += char('0' + rng() % 2);
    for (std::size_t i = 0; i < lq; ++i) per += char('0' + rng() % 2);
    SymbolStream s = ep(pre.c_str(), per.c_str());
    std::string expect = pre + oracle::repeat(per, 40);
    CHECK(s.prefix(40).to_string() == expect.substr(0, 40));
    std::uint64_t m = rng() % 9;
    CHECK(shift(s, m).prefix(20).to_string() == expect.substr(m, 20));
  }
}
