#include "kneading/reproduce.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "kneading/cfrac.hpp"
#include "kneading/encoding.hpp"
#include "kneading/feigenbaum.hpp"
#include "kneading/frequency.hpp"
#include "kneading/spectral.hpp"

namespace kneading {

std::string TauSpec::to_string() const {
  switch (kind) {
    case Kind::Rational: return kneading::to_string(value);
    case Kind::FeigenbaumLevel: return "feigenbaum:" + std::to_string(level);
    case Kind::FeigenbaumInfinity: return "feigenbaum:inf";
  }
  return "?";
}

SymbolStream TauSpec::kneading() const {
  switch (kind) {
    case Kind::Rational: return kneading_of_tau(value);
    case Kind::FeigenbaumLevel: return feigenbaum_K_stream(level);
    case Kind::FeigenbaumInfinity: return feigenbaum_K_infinity();
  }
  throw std::logic_error("bad tau spec");
}

TauSpec parse_tau_spec(std::string_view text) {
  TauSpec spec;
  constexpr std::string_view prefix = "feigenbaum:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view rest = text.substr(prefix.size());
    if (rest == "inf") {
      spec.kind = TauSpec::Kind::FeigenbaumInfinity;
      return spec;
    }
    unsigned j = 0;
    if (rest.empty() || rest.size() > 3) throw std::invalid_argument("bad level in " + std::string(text));
    for (char c : rest) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad level in " + std::string(text));
      j = j * 10 + unsigned(c - '0');
    }
    if (j == 0) throw std::invalid_argument("Feigenbaum level must be >= 1");
    spec.kind = TauSpec::Kind::FeigenbaumLevel;
    spec.level = j;
    return spec;
  }
  spec.value = parse_rational(text);
  if (spec.value <= 0 || spec.value > 1) throw std::invalid_argument("τ must lie in (0, 1]: " + std::string(text));
  return spec;
}

bool ReproduceReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

nlohmann::json ReproduceReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    rows.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return {{"id", id}, {"pass", pass()}, {"checks", rows}};
}

namespace {

void expect(ReproduceReport& r, std::string name, std::string expected, std::string actual) {
  bool ok = expected == actual;
  r.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

std::string join(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

std::string join(const std::vector<Integer>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out + "}";
}

ReproduceReport tau_table() {
  // τ_1 .. τ_7 as listed exactly.
  static const char* golden[] = {"2/3",        "4/5",         "14/17", "212/257", "54062/65537",
                                 "3542953172/4294967297",
                                 "15216868001456509742/18446744073709551617"};
  ReproduceReport r{"tau-table", {}};
  for (unsigned j = 1; j <= 7; ++j) {
    expect(r, "tau_" + std::to_string(j), golden[j - 1], to_string(tau_level(j).value()));
  }
  return r;
}

ReproduceReport cf_table_report() {
  // Continued fractions of τ_1 .. τ_8 as listed.
  static const char* golden[] = {
      "[1,2]",
      "[1,4]",
      "[1,4,1,2]",
      "[1,4,1,2,2,6]",
      "[1,4,1,2,2,6,2,1,2,9,1,2]",
      "[1,4,1,2,2,6,2,1,2,9,1,2,2,1,1,21,1,10,2,1,1,1,5]",
      "[1,4,1,2,2,6,2,1,2,9,1,2,2,1,1,21,1,10,2,1,1,1,4,1,2,29,1,24,1,1,7,11,3,2,5,1,1,1,89]",
      "[1,4,1,2,2,6,2,1,2,9,1,2,2,1,1,21,1,10,2,1,1,1,4,1,2,29,1,24,1,1,7,11,3,2,5,1,1,1,88,1,1,1,6,1,1,33,2,6,1,"
      "24,1,5,212,2,1,10,1,3,11,2,1,2,1,10,1,1,2,3,2549,1,2]",
  };
  ReproduceReport r{"cf-table", {}};
  for (const auto& row : cf_table(8)) expect(r, "cf_tau_" + std::to_string(row.j), golden[row.j - 1], row.cf.to_string());
  return r;
}

ReproduceReport nj_sequence() {
  // n_j, 1 <= j <= 12.
  static const std::size_t golden[] = {2, 2, 4, 6, 12, 23, 39, 71, 121, 253, 528, 1129};
  ReproduceReport r{"nj-sequence", {}};
  for (const auto& row : cf_table(12)) {
    expect(r, "n_" + std::to_string(row.j), std::to_string(golden[row.j - 1]), std::to_string(row.n));
  }
  return r;
}

ReproduceReport xi_series_report() {
  // Expansion of Ξ(z) through z^16.
  static const char* golden = "1 - z - z^2 + z^3 - z^4 + z^5 + z^6 - z^7 - z^8 + z^9 + z^10 - z^11 + z^12 - z^13 - z^14 + z^15 - z^16";
  ReproduceReport r{"xi-series", {}};
  expect(r, "xi_16", golden, to_string(xi_series(16)));
  expect(r, "functional_equation_1024", "0", xi_functional_residual(1024).is_zero() ? "0" : "nonzero");
  return r;
}

ReproduceReport frequencies_report() {
  ReproduceReport r{"frequencies", {}};
  auto feig = letter_frequencies(feigenbaum_substitution());
  // M = [[0,1],[2,1]] with eigenvalues 2 and -1 and v = (1/3, 2/3).
  std::ostringstream m;
  const auto M = incidence(feigenbaum_substitution()).entries;
  m << "[[" << M[0][0] << "," << M[0][1] << "],[" << M[1][0] << "," << M[1][1] << "]]";
  expect(r, "feigenbaum_matrix", "[[0,1],[2,1]]", m.str());
  expect(r, "feigenbaum_eigenvalues", "{2, -1}", join(feig.eigenvalues));
  expect(r, "feigenbaum_frequencies", "(1/3, 2/3)", join(feig.frequencies));
  // Symbols of τ_∞ occur with frequency 1/2.
  expect(r, "thue_morse_frequencies", "(1/2, 1/2)", join(letter_frequencies(thue_morse_substitution()).frequencies));
  // Pairs 00, 01, 10, 11 of τ_∞: 1/3, 1/6, 1/6, 1/3.
  expect(r, "pair_frequencies", "(1/3, 1/6, 1/6, 1/3)", join(letter_frequencies(pair_substitution()).frequencies));
  return r;
}

IntSeries poly(std::initializer_list<int> c, std::size_t N) {
  IntSeries s(N);
  std::size_t k = 0;
  for (int x : c) {
    if (k <= N) s[k] = x;
    ++k;
  }
  return s;
}

ReproduceReport zeta_examples() {
  constexpr std::size_t N = 30;
  ReproduceReport r{"zeta-examples", {}};
  // ζ(1,z) = 1/(1-2z)
  expect(r, "zeta_1", to_string(reciprocal(poly({1, -2}, N))), to_string(zeta_series(kneading_of_tau(1), N)));
  // ζ(5/6,z) = (1+z)/((1-z)(1-2z^2))
  expect(r, "zeta_5/6", to_string(poly({1, 1}, N) * reciprocal(poly({1, -1}, N) * poly({1, 0, -2}, N))),
         to_string(zeta_series(kneading_of_tau(Rational(5, 6)), N)));
  // ζ(6/7,z) = 1/((1-z)(1-z-z^2))
  expect(r, "zeta_6/7", to_string(reciprocal(poly({1, -1}, N) * poly({1, -1, -1}, N))),
         to_string(zeta_series(kneading_of_tau(Rational(6, 7)), N)));
  // 1/ζ(τ_j,z) = (1-z) ∏_{n=0}^{j} (1-z^{2^n}); the periodic determinant of K_j
  // supplies every factor except 1 - z^{2^j}.
  for (unsigned j = 1; j <= 6; ++j) {
    IntSeries via_k = zeta_series(feigenbaum_K_stream(j), N) * reciprocal(one_minus_power(std::size_t{1} << j, N));
    expect(r, "zeta_tau_" + std::to_string(j), to_string(feigenbaum_zeta(j, N)), to_string(via_k));
  }
  return r;
}

std::string interval(double lo, double hi) {
  std::ostringstream out;
  out.precision(17);
  out << "[" << lo << ", " << hi << "]";
  return out.str();
}

ReproduceReport entropy_examples() {
  constexpr double tol = 1e-10;
  ReproduceReport r{"entropy-examples", {}};
  struct Case {
    const char* name;
    Rational tau;
    double h;
  };
  // h(1) = log 2, h(5/6) = log √2, h(6/7) = log((1+√5)/2) (listed with a sign slip).
  const Case cases[] = {{"h_1", Rational(1), std::numbers::ln2},
                        {"h_5/6", Rational(5, 6), std::numbers::ln2 / 2},
                        {"h_6/7", Rational(6, 7), std::log(std::numbers::phi)}};
  for (const auto& c : cases) {
    EntropyResult e = entropy(kneading_of_tau(c.tau), 256, tol);
    bool ok = e.status == EntropyResult::Status::Positive && e.lo <= c.h && c.h <= e.hi && e.hi - e.lo <= tol;
    std::ostringstream want;
    want.precision(17);
    want << "contains " << c.h;
    r.checks.push_back({c.name, want.str(), interval(e.lo, e.hi), ok});
  }
  // h(τ_j) = 0.
  for (unsigned j = 1; j <= 10; ++j) {
    EntropyResult e = entropy(feigenbaum_K_stream(j), 64, tol);
    expect(r, "h_tau_" + std::to_string(j), "zero", to_string(e.status));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& reproduce_ids() {
  static const std::vector<std::string> ids{"tau-table",   "cf-table",      "nj-sequence",     "xi-series",
                                            "frequencies", "zeta-examples", "entropy-examples"};
  return ids;
}

ReproduceReport reproduce(std::string_view id) {
  static const std::vector<std::pair<std::string_view, std::function<ReproduceReport()>>> table{
      {"tau-table", tau_table},         {"cf-table", cf_table_report},     {"nj-sequence", nj_sequence},
      {"xi-series", xi_series_report},  {"frequencies", frequencies_report}, {"zeta-examples", zeta_examples},
      {"entropy-examples", entropy_examples}};
  for (const auto& [name, fn] : table)
    if (name == id) return fn();
  throw std::invalid_argument("unknown table identifier: " + std::string(id));
}

}  // namespace kneading
