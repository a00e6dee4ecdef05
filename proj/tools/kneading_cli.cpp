// Command-line front end: kneading <verb> [options]. Exit codes: 0 pass,
// 1 mismatch, 2 usage or unusable input, 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "kneading/cfrac.hpp"
#include "kneading/dynamics.hpp"
#include "kneading/encoding.hpp"
#include "kneading/feigenbaum.hpp"
#include "kneading/frequency.hpp"
#include "kneading/language.hpp"
#include "kneading/reproduce.hpp"
#include "kneading/spectral.hpp"

namespace {

using nlohmann::json;
using namespace kneading;

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

struct Config {
  std::string format = "json";
  std::uint64_t precision_bits = 128;
  std::size_t order = 32;
  std::uint64_t seed = 1;
  bool as_float = false;
  std::string out;
};

struct Output {
  json doc = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt_double(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

json number(const Config& cfg, const Rational& x) {
  if (cfg.as_float) return x.get_d();
  return to_string(x);
}

json series_json(const IntSeries& s) {
  json a = json::array();
  for (const auto& c : s.coefficients()) a.push_back(c.get_str());
  return a;
}

std::string render(const Config& cfg, const Output& out) {
  std::ostringstream s;
  if (cfg.format == "json") {
    s << out.doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) s << (i ? "," : "") << cells[i];
      s << "\n";
    };
    if (!out.header.empty()) {
      line(out.header);
      for (const auto& r : out.rows) line(r);
    } else {
      line({"key", "value"});
      for (auto& [k, v] : out.doc.items()) line({k, v.is_string() ? v.get<std::string>() : v.dump()});
    }
  } else {
    for (auto& [k, v] : out.doc.items()) {
      if (v.is_array() && v.size() > 8 && !out.rows.empty()) continue;
      s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    for (const auto& r : out.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "  " : "") << r[i];
      s << "\n";
    }
  }
  return s.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into " + target.string() + ": " + ec.message());
  }
}

void emit(const Config& cfg, const Output& out) {
  std::string text = render(cfg, out);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_atomic(cfg.out, text);
  }
}

// ------------------------------------------------------------------- verbs

int run_tau(const Config& cfg, const std::string& spec_text, std::size_t digits) {
  TauSpec spec = parse_tau_spec(spec_text);
  SymbolStream K = spec.kneading();
  Output out;
  out.doc["tau"] = spec.to_string();
  out.doc["kneading"] = K.describe();
  out.doc["kneading_prefix"] = K.prefix(digits).to_string();
  out.doc["digits"] = xi(K).prefix(digits).to_string();
  switch (spec.kind) {
    case TauSpec::Kind::Rational:
      out.doc["value"] = number(cfg, spec.value);
      out.doc["in_lambda"] = in_lambda(spec.value);
      break;
    case TauSpec::Kind::FeigenbaumLevel: {
      TauLevel level = tau_level(spec.level);
      out.doc["value"] = number(cfg, level.value());
      out.doc["level"] = to_json(level);
      out.doc["in_lambda"] = in_lambda(level.value());
      break;
    }
    case TauSpec::Kind::FeigenbaumInfinity: {
      DyadicEnclosure e = tau_infinity_enclosure(cfg.precision_bits, EnclosureMethod::DigitSum);
      out.doc["enclosure"] = cfg.as_float ? json{{"lo", e.lo.get_d()}, {"hi", e.hi.get_d()}} : to_json(e);
      break;
    }
  }
  out.doc["maximal"] = to_string(is_maximal(K, std::max<std::size_t>(digits, 64)));
  emit(cfg, out);
  return kPass;
}

int run_cf(const Config& cfg, const std::string& spec_text, unsigned table) {
  Output out;
  if (table > 0) {
    out.header = {"j", "n_j", "cf"};
    json rows = json::array();
    for (const auto& row : cf_table(table)) {
      rows.push_back({{"j", row.j}, {"n", row.n}, {"cf", row.cf.to_string()}});
      out.rows.push_back({std::to_string(row.j), std::to_string(row.n), "\"" + row.cf.to_string() + "\""});
    }
    json cont = json::array();
    for (unsigned j = 1; j < table; ++j) {
      auto c = cf_continuation_check(j);
      cont.push_back({{"j", c.j},
                      {"n_j", c.n_j},
                      {"observed", to_string(c.observed)},
                      {"predicted", to_string(c.predicted)},
                      {"shared_prefix", c.shared_prefix}});
    }
    out.doc["table"] = rows;
    out.doc["continuation"] = cont;
    emit(cfg, out);
    return kPass;
  }
  TauSpec spec = parse_tau_spec(spec_text);
  std::vector<Integer> quotients;
  bool exact = true;
  if (spec.kind == TauSpec::Kind::FeigenbaumInfinity) {
    quotients = cf_of_enclosure(tau_infinity_enclosure(cfg.precision_bits, EnclosureMethod::ProductFormula));
    exact = false;
  } else {
    Rational x = spec.kind == TauSpec::Kind::Rational ? spec.value : tau_level(spec.level).value();
    quotients = cf_of_rational(x).quotients;
  }
  ContinuedFraction cf{quotients};
  json conv = json::array();
  out.header = {"index", "r", "s"};
  for (const auto& c : convergents(cf)) {
    conv.push_back({{"index", c.index}, {"r", c.r.get_str()}, {"s", c.s.get_str()}});
    out.rows.push_back({std::to_string(c.index), c.r.get_str(), c.s.get_str()});
  }
  out.doc["tau"] = spec.to_string();
  out.doc["exact"] = exact;
  out.doc["cf"] = cf.to_string();
  out.doc["length"] = quotients.size();
  out.doc["convergents"] = conv;
  emit(cfg, out);
  return kPass;
}

int run_zeta(const Config& cfg, const std::string& spec_text, bool counts, bool with_entropy, double tol) {
  TauSpec spec = parse_tau_spec(spec_text);
  SymbolStream K = spec.kneading();
  IntSeries z = zeta_series(K, cfg.order);
  Output out;
  out.doc["tau"] = spec.to_string();
  out.doc["order"] = cfg.order;
  out.doc["determinant"] = series_json(kneading_determinant(K, cfg.order));
  out.doc["coefficients"] = series_json(z);
  out.header = {"n", "zeta"};
  for (std::size_t n = 0; n <= cfg.order; ++n) out.rows.push_back({std::to_string(n), z[n].get_str()});
  if (counts) {
    OrbitCounts oc = orbit_counts(z);
    json per = json::object(), prime = json::object();
    out.header = {"n", "zeta", "per", "prime"};
    for (std::size_t n = 1; n <= oc.order(); ++n) {
      per[std::to_string(n)] = oc.per_counts[n].get_str();
      prime[std::to_string(n)] = oc.prime_counts[n].get_str();
      out.rows[n].push_back(oc.per_counts[n].get_str());
      out.rows[n].push_back(oc.prime_counts[n].get_str());
    }
    out.rows[0].insert(out.rows[0].end(), {"", ""});
    out.doc["perCounts"] = per;
    out.doc["primeCounts"] = prime;
  }
  if (with_entropy) {
    EntropyResult e = entropy(K, cfg.order, tol);
    json ent{{"status", to_string(e.status)}, {"lo", fmt_double(e.lo)}, {"hi", fmt_double(e.hi)}};
    if (e.status == EntropyResult::Status::Positive) {
      ent["z_lo"] = to_dyadic_string(e.z_lo);
      ent["z_hi"] = to_dyadic_string(e.z_hi);
    }
    ent["certificate"] = {{"order", e.certificate.order},
                          {"polynomial", e.certificate.polynomial},
                          {"unit_root_multiplicity", e.certificate.unit_root_multiplicity},
                          {"positive_up_to", to_string(e.certificate.positive_up_to)},
                          {"interval_checks", e.certificate.interval_checks},
                          {"positive_pieces", e.certificate.positive_cover.size()},
                          {"descartes_no_unit_root", e.certificate.descartes_no_unit_root}};
    if (e.certificate.negative_at) ent["certificate"]["negative_at"] = to_string(*e.certificate.negative_at);
    ent["verified"] = verify_entropy_certificate(K, e);
    out.doc["entropy"] = ent;
  }
  emit(cfg, out);
  return kPass;
}

int run_lang(const Config& cfg, const std::string& what, const std::string& spec_text, std::size_t nmax,
             const std::string& mode) {
  TauSpec spec = parse_tau_spec(spec_text);
  SymbolStream K = spec.kneading();
  Output out;
  out.doc["tau"] = spec.to_string();
  if (what == "complexity") {
    LanguageQuery q{K, nmax, mode == "full" ? LanguageMode::Full : LanguageMode::Core};
    auto p = complexity(q);
    out.doc["mode"] = to_string(q.mode);
    json arr = json::array();
    out.header = {"n", "p"};
    for (std::size_t n = 1; n <= p.size(); ++n) {
      arr.push_back(p[n - 1]);
      out.rows.push_back({std::to_string(n), std::to_string(p[n - 1])});
    }
    out.doc["p"] = arr;
  } else {
    auto words = forbidden_words(xi(K), nmax);
    json arr = json::array();
    out.header = {"length", "word"};
    for (const auto& w : words) {
      arr.push_back(w.to_string());
      out.rows.push_back({std::to_string(w.size()), w.to_string()});
    }
    out.doc["forbidden"] = arr;
  }
  emit(cfg, out);
  return kPass;
}

int run_freq(const Config& cfg, const std::string& stream, std::size_t block, std::size_t prefix, bool aligned) {
  SymbolStream s = stream == "feigenbaum"   ? feigenbaum_K_infinity()
                   : stream == "thue-morse" ? thue_morse_stream()
                                            : tau_infinity_digits().digits;
  auto f = empirical_frequencies(s, block, prefix, aligned ? BlockAlignment::Aligned : BlockAlignment::Sliding);
  Output out;
  out.doc["stream"] = stream;
  out.doc["block"] = block;
  out.doc["prefix"] = prefix;
  out.doc["alignment"] = aligned ? "aligned" : "sliding";
  json arr = json::object();
  out.header = {"block", "frequency"};
  for (std::size_t v = 0; v < f.size(); ++v) {
    std::string name;
    for (std::size_t i = block; i-- > 0;) name += ((v >> i) & 1) ? '1' : '0';
    arr[name] = number(cfg, f[v]);
    out.rows.push_back({name, cfg.as_float ? fmt_double(f[v].get_d()) : to_string(f[v])});
  }
  out.doc["frequencies"] = arr;
  std::optional<SubstitutionRule> rule;
  if (stream == "feigenbaum" && block == 1) rule = feigenbaum_substitution();
  if (stream != "feigenbaum" && block == 1) rule = thue_morse_substitution();
  if (stream == "tau-inf" && block == 2 && aligned) rule = pair_substitution();
  if (rule) {
    auto exact = letter_frequencies(*rule);
    json e = json::array();
    for (const auto& x : exact.frequencies) e.push_back(number(cfg, x));
    out.doc["eigenvector"] = e;
    out.doc["deviation"] = number(cfg, max_deviation(f, exact.frequencies));
  }
  emit(cfg, out);
  return kPass;
}

UnimodalMap make_map(const std::string& family, double r) {
  if (family == "logistic") return logistic_map(r);
  if (family == "tent") return tent_map(r);
  throw std::invalid_argument("unknown family: " + family);
}

int run_dyn(const Config& cfg, const std::string& what, const std::string& family, double r, std::size_t n,
            double from, double to, std::size_t steps, std::size_t pairs) {
  Output out;
  if (what == "kneading") {
    UnimodalMap map = make_map(family, r);
    Itinerary k = kneading::kneading(map, n);
    std::string flags;
    for (bool b : k.reliable) flags += b ? '.' : '?';
    out.doc["map"] = map.name;
    out.doc["kneading"] = k.symbols.to_string();
    out.doc["reliability"] = flags;
    out.doc["reliable_prefix"] = k.reliable_prefix();
    out.doc["tau_truncation"] = number(cfg, tau_truncation(k));
  } else if (what == "renormalize") {
    UnimodalMap map = make_map(family, r);
    RenormalizedMap rf = renormalize_map(map);
    Itinerary kf = kneading::kneading(map, 2 * n), kr = kneading::kneading(rf.map, n);
    out.doc["map"] = map.name;
    out.doc["a"] = fmt_double(rf.a);
    out.doc["b"] = fmt_double(rf.b);
    out.doc["Rf(0)"] = fmt_double(rf.map(0.0));
    out.doc["Rf(1)"] = fmt_double(rf.map(1.0));
    out.doc["kneading_f"] = kf.symbols.to_string();
    out.doc["kneading_Rf"] = kr.symbols.to_string();
    BinaryWord hat;
    for (std::size_t k = 1; k <= n; ++k) hat.push_back(1 - kf.symbols.at(2 * k));
    out.doc["renormalized_sequence"] = hat.to_string();
  } else if (what == "order") {
    UnimodalMap map = make_map(family, r);
    OrderReport rep = order_preservation_check(map, pairs, n, cfg.seed);
    out.doc["map"] = map.name;
    out.doc["decided"] = rep.decided;
    out.doc["equal_prefix"] = rep.equal_prefix;
    out.doc["unreliable"] = rep.unreliable;
    out.doc["violations"] = rep.violations;
    emit(cfg, out);
    return rep.violations == 0 ? kPass : kMismatch;
  } else {
    ScanReport rep = monotonicity_scan(linear_grid(from, to, steps), n);
    out.header = {"r", "reliable", "tau", "kneading"};
    json rows = json::array();
    for (const auto& row : rep.rows) {
      std::string tau = cfg.as_float ? fmt_double(row.tau.get_d()) : to_string(row.tau);
      rows.push_back({{"r", fmt_double(row.r)}, {"reliable", row.reliable}, {"tau", tau}, {"kneading", row.kneading.to_string()}});
      out.rows.push_back({fmt_double(row.r), std::to_string(row.reliable), tau, row.kneading.to_string()});
    }
    out.doc["rows"] = rows;
    out.doc["decreases"] = rep.decreases;
  }
  emit(cfg, out);
  return kPass;
}

int run_reproduce(const Config& cfg, const std::string& id, const std::string& dir) {
  std::vector<std::string> ids = id == "all" ? reproduce_ids() : std::vector<std::string>{id};
  bool all_pass = true;
  json summary = json::array();
  Output out;
  out.header = {"id", "check", "pass"};
  for (const auto& target : ids) {
    ReproduceReport rep = reproduce(target);
    all_pass = all_pass && rep.pass();
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      write_atomic((std::filesystem::path(dir) / (target + ".json")).string(), rep.to_json().dump(2) + "\n");
    }
    summary.push_back(rep.to_json());
    for (const auto& c : rep.checks) out.rows.push_back({target, c.name, c.pass ? "PASS" : "FAIL"});
  }
  out.doc["reports"] = summary;
  out.doc["pass"] = all_pass;
  emit(cfg, out);
  return all_pass ? kPass : kMismatch;
}

int run_export(Config cfg, const std::string& kind, unsigned j, unsigned kmin, unsigned kmax) {
  Output out;
  if (kind == "zeta-roots") {
    auto roots = xi_partial_product_roots(j);
    out.header = {"re", "im", "modulus"};
    json arr = json::array();
    double worst = 0.0;
    for (const auto& z : roots) {
      worst = std::max(worst, std::abs(std::abs(z) - 1.0));
      arr.push_back({fmt_double(z.real()), fmt_double(z.imag())});
      out.rows.push_back({fmt_double(z.real()), fmt_double(z.imag()), fmt_double(std::abs(z))});
    }
    out.doc["j"] = j;
    out.doc["count"] = roots.size();
    out.doc["max_modulus_error"] = fmt_double(worst);
    out.doc["roots"] = arr;
  } else if (kind == "bifurcation-scan") {
    ScanReport rep = monotonicity_scan(linear_grid(3.5, 4.0, 100), 24);
    out.header = {"r", "reliable", "tau", "kneading"};
    for (const auto& row : rep.rows) {
      out.rows.push_back({fmt_double(row.r), std::to_string(row.reliable), fmt_double(row.tau.get_d()),
                          row.kneading.to_string()});
    }
    out.doc["rows"] = rep.rows.size();
    out.doc["decreases"] = rep.decreases;
  } else if (kind == "frequency-convergence") {
    out.header = {"prefix", "deviation"};
    json arr = json::array();
    for (const auto& row : frequency_convergence(kmin, kmax)) {
      arr.push_back({{"prefix", row.prefix}, {"deviation", to_string(row.deviation)}});
      out.rows.push_back({std::to_string(row.prefix), fmt_double(row.deviation.get_d())});
    }
    out.doc["rows"] = arr;
  } else {
    throw std::invalid_argument("unknown export kind: " + kind);
  }
  if (cfg.format == "text") cfg.format = "csv";
  emit(cfg, out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kneading calculus for unimodal maps and the Feigenbaum cascade"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--precision-bits", cfg.precision_bits, "Bits for τ_∞ enclosures")->check(CLI::Range(1, 1 << 20));
  app.add_option("--order", cfg.order, "Power series order")->check(CLI::Range(1, 1 << 16));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_flag("--float", cfg.as_float, "Print numbers as binary64");
  app.add_option("--out", cfg.out, "Write output to this file");

  std::string tau_text = "1";
  std::size_t digits = 32;
  auto* tau = app.add_subcommand("tau", "τ value, digits and kneading sequence");
  tau->add_option("spec", tau_text, "p/q, feigenbaum:j or feigenbaum:inf")->required();
  tau->add_option("--digits", digits, "Symbols to print")->check(CLI::Range(1, 1 << 20));

  unsigned cf_table_j = 0;
  auto* cf = app.add_subcommand("cf", "Continued fractions");
  cf->add_option("spec", tau_text, "p/q, feigenbaum:j or feigenbaum:inf");
  cf->add_option("--table", cf_table_j, "Expansions of τ_1..τ_J")->check(CLI::Range(1, 16));

  bool counts = false, with_entropy = false;
  double tol = 1e-10;
  auto* zeta = app.add_subcommand("zeta", "Zeta function, orbit counts and entropy");
  zeta->add_option("--tau", tau_text, "p/q, feigenbaum:j or feigenbaum:inf")->required();
  zeta->add_option("--order", cfg.order, "Power series order")->check(CLI::Range(1, 1 << 16));
  zeta->add_flag("--counts", counts, "Periodic point and orbit counts");
  zeta->add_flag("--entropy", with_entropy, "Certified entropy");
  zeta->add_option("--tol", tol, "Entropy tolerance")->check(CLI::PositiveNumber);

  std::string lang_what, lang_mode = "core";
  std::size_t nmax = 12;
  auto* lang = app.add_subcommand("lang", "Admissible words");
  lang->add_option("what", lang_what, "complexity or forbidden")->required()->check(CLI::IsMember({"complexity", "forbidden"}));
  lang->add_option("--tau", tau_text, "p/q, feigenbaum:j or feigenbaum:inf")->required();
  lang->add_option("--nmax", nmax, "Maximal word length")->check(CLI::Range(1, 4096));
  lang->add_option("--mode", lang_mode, "core or full")->check(CLI::IsMember({"core", "full"}));

  std::string stream = "feigenbaum";
  std::size_t block = 1, prefix = std::size_t{1} << 16;
  bool aligned = false;
  auto* freq = app.add_subcommand("freq", "Symbol and block frequencies");
  freq->add_option("--stream", stream, "feigenbaum, thue-morse or tau-inf")
      ->check(CLI::IsMember({"feigenbaum", "thue-morse", "tau-inf"}));
  freq->add_option("--block", block, "Block length")->check(CLI::Range(1, 16));
  freq->add_option("--prefix", prefix, "Prefix length")->check(CLI::Range(1, 1 << 26));
  freq->add_flag("--aligned", aligned, "Count non-overlapping blocks");

  std::string dyn_what, family = "logistic";
  double r = 3.9, from = 3.5, to = 4.0;
  std::size_t n = 64, steps = 100, pairs = 1000;
  std::string csv;
  auto* dyn = app.add_subcommand("dyn", "Numeric unimodal maps");
  dyn->add_option("what", dyn_what, "kneading, renormalize, order or scan")
      ->required()
      ->check(CLI::IsMember({"kneading", "renormalize", "order", "scan"}));
  dyn->add_option("--family", family, "logistic or tent")->check(CLI::IsMember({"logistic", "tent"}));
  dyn->add_option("--r", r, "Parameter (logistic r or tent slope)");
  dyn->add_option("--n", n, "Symbols")->check(CLI::Range(1, 1 << 16));
  dyn->add_option("--from", from, "Scan start");
  dyn->add_option("--to", to, "Scan end");
  dyn->add_option("--steps", steps, "Scan points")->check(CLI::Range(1, 1 << 20));
  dyn->add_option("--pairs", pairs, "Decided pairs to sample")->check(CLI::Range(1, 1 << 24));
  dyn->add_option("--csv", csv, "Write the scan as CSV to this file");

  std::string target, dir;
  auto* rep = app.add_subcommand("reproduce", "Regenerate a table and compare with golden values");
  rep->add_option("id", target, "Table identifier or all")->required();
  rep->add_option("--dir", dir, "Directory for per-table reports");

  std::string kind;
  unsigned j = 6, kmin = 10, kmax = 20;
  auto* exp = app.add_subcommand("export", "Plot data");
  exp->add_option("kind", kind, "zeta-roots, bifurcation-scan or frequency-convergence")
      ->required()
      ->check(CLI::IsMember({"zeta-roots", "bifurcation-scan", "frequency-convergence"}));
  exp->add_option("--j", j, "Level for zeta-roots")->check(CLI::Range(0, 12));
  exp->add_option("--kmin", kmin, "Smallest prefix exponent")->check(CLI::Range(1, 24));
  exp->add_option("--kmax", kmax, "Largest prefix exponent")->check(CLI::Range(1, 24));

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*tau) return run_tau(cfg, tau_text, digits);
    if (*cf) {
      if (cf_table_j == 0 && cf->count("spec") == 0) throw std::invalid_argument("cf needs a τ spec or --table");
      return run_cf(cfg, tau_text, cf_table_j);
    }
    if (*zeta) return run_zeta(cfg, tau_text, counts, with_entropy, tol);
    if (*lang) return run_lang(cfg, lang_what, tau_text, nmax, lang_mode);
    if (*freq) return run_freq(cfg, stream, block, prefix, aligned);
    if (*dyn) {
      if (dyn_what == "scan" && !csv.empty()) {
        cfg.out = csv;
        cfg.format = "csv";
      }
      return run_dyn(cfg, dyn_what, family, r, n, from, to, steps, pairs);
    }
    if (*rep) {
      if (target != "all" && std::find(reproduce_ids().begin(), reproduce_ids().end(), target) == reproduce_ids().end()) {
        std::cerr << "error: unknown table identifier: " << target << "\n";
        return kUsage;
      }
      return run_reproduce(cfg, target, dir);
    }
    if (*exp) return run_export(cfg, kind, j, kmin, kmax);
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and out_of_range reach here as bad input.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const EntropyInconclusive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
