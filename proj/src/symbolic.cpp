#include "kneading/symbolic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kneading {

// ---------------------------------------------------------------- BinaryWord

BinaryWord::BinaryWord(std::vector<Symbol> bits) : bits_(std::move(bits)) {
  for (Symbol s : bits_) {
    if (s > 1) throw std::invalid_argument("binary word symbol must be 0 or 1");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<Symbol> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("binary word may only contain '0' and '1': " + std::string(text));
    }
    bits.push_back(static_cast<Symbol>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

Symbol BinaryWord::at(std::size_t k) const {
  if (k == 0 || k > bits_.size()) throw std::out_of_range("word index is 1-based and within length");
  return bits_[k - 1];
}

std::size_t BinaryWord::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Symbol{1}));
}

BinaryWord BinaryWord::prefix(std::size_t n) const {
  if (n > bits_.size()) throw std::out_of_range("prefix longer than word");
  BinaryWord w;
  w.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

BinaryWord BinaryWord::drop(std::size_t k) const {
  BinaryWord w;
  if (k < bits_.size()) w.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(k), bits_.end());
  return w;
}

BinaryWord BinaryWord::complement() const {
  BinaryWord w(*this);
  for (auto& s : w.bits_) s ^= 1;
  return w;
}

BinaryWord BinaryWord::flipped(std::size_t k) const {
  BinaryWord w(*this);
  if (k == 0 || k > w.bits_.size()) throw std::out_of_range("flip index is 1-based and within length");
  w.bits_[k - 1] ^= 1;
  return w;
}

bool BinaryWord::is_prefix_of(const BinaryWord& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

void BinaryWord::push_back(Symbol s) {
  if (s > 1) throw std::invalid_argument("binary word symbol must be 0 or 1");
  bits_.push_back(s);
}

BinaryWord& BinaryWord::operator+=(const BinaryWord& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  return *this;
}

std::string BinaryWord::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

// ---------------------------------------------------------- SubstitutionRule

SubstitutionRule::SubstitutionRule(std::string letters, std::vector<Word> images)
    : letters_(std::move(letters)), images_(std::move(images)) {
  if (letters_.size() != images_.size() || images_.empty()) {
    throw std::invalid_argument("substitution needs one image per letter");
  }
  for (const auto& img : images_) {
    if (img.empty()) throw std::invalid_argument("substitution images must be nonempty");
    for (Symbol s : img) {
      if (s >= images_.size()) throw std::invalid_argument("image symbol outside alphabet");
    }
  }
}

const Word& SubstitutionRule::image(Symbol a) const {
  if (a >= images_.size()) throw std::domain_error("symbol outside substitution alphabet");
  return images_[a];
}

std::string SubstitutionRule::spell(std::span<const Symbol> w) const {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s >= letters_.size()) throw std::domain_error("symbol outside substitution alphabet");
    out.push_back(letters_[s]);
  }
  return out;
}

Word SubstitutionRule::read(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto pos = letters_.find(c);
    if (pos == std::string::npos) throw std::domain_error(std::string("letter not in alphabet: ") + c);
    w.push_back(static_cast<Symbol>(pos));
  }
  return w;
}

SubstitutionRule feigenbaum_substitution() { return SubstitutionRule("01", {{1, 1}, {1, 0}}); }

SubstitutionRule thue_morse_substitution() { return SubstitutionRule("01", {{0, 1}, {1, 0}}); }

SubstitutionRule pair_substitution() {
  // a=0, b=1, c=2, d=3
  return SubstitutionRule("abcd", {{0, 2}, {0, 3}, {3, 0}, {3, 1}});
}

Word substitute(const SubstitutionRule& rule, std::span<const Symbol> w) {
  Word out;
  for (Symbol s : w) {
    const Word& img = rule.image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

BinaryWord substitute(const SubstitutionRule& rule, const BinaryWord& w) {
  if (!rule.is_binary()) throw std::domain_error("binary word needs a binary substitution");
  return BinaryWord(substitute(rule, w.bits()));
}

Word fixed_point_prefix_word(const SubstitutionRule& rule, Symbol letter, std::size_t n) {
  const Word& img = rule.image(letter);
  if (img.front() != letter) throw std::logic_error("image of the prefix letter must begin with it");
  if (img.size() < 2) throw std::logic_error("prefix letter image must have length >= 2 for the iteration to grow");
  Word w{letter};
  while (w.size() < n) w = substitute(rule, w);
  w.resize(n);
  return w;
}

BinaryWord fixed_point_prefix(const SubstitutionRule& rule, Symbol letter, std::size_t n) {
  if (!rule.is_binary()) throw std::domain_error("binary fixed point needs a binary substitution");
  return BinaryWord(fixed_point_prefix_word(rule, letter, n));
}

// -------------------------------------------------------------- SymbolStream

struct SymbolStream::Periodic {
  BinaryWord preperiod;
  BinaryWord period;
};

struct SymbolStream::Lazy {
  std::string description;
  PrefixFunction produce;
  std::unique_ptr<SubstitutionRule> rule;
  Symbol letter = 0;

  mutable std::mutex mutex;
  mutable std::vector<Symbol> cache;

  void ensure(std::size_t n) const {
    if (cache.size() >= n) return;
    std::size_t target = std::max<std::size_t>({n, 2 * cache.size(), 64});
    auto fresh = produce(target);
    if (fresh.size() < target) throw std::logic_error("stream generator returned a short prefix");
    for (Symbol s : fresh) {
      if (s > 1) throw std::logic_error("stream generator produced a non-binary symbol");
    }
    cache = std::move(fresh);
  }
};

namespace {

// Smallest d dividing |w| with w = (w[0..d))^{|w|/d}.
BinaryWord primitive_root(const BinaryWord& w) {
  const std::size_t n = w.size();
  auto bits = w.bits();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = bits[i] == bits[i - d];
    if (repeats) return w.prefix(d);
  }
  return w;
}

}  // namespace

SymbolStream SymbolStream::periodic(BinaryWord period) {
  return eventually_periodic(BinaryWord{}, std::move(period));
}

SymbolStream SymbolStream::eventually_periodic(BinaryWord preperiod, BinaryWord period) {
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  period = primitive_root(period);
  // Absorb preperiod symbols that already continue the cycle backwards.
  std::vector<Symbol> pre(preperiod.bits().begin(), preperiod.bits().end());
  std::vector<Symbol> per(period.bits().begin(), period.bits().end());
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  SymbolStream s;
  s.kind_ = Kind::EventuallyPeriodic;
  s.periodic_ = std::make_shared<Periodic>(Periodic{BinaryWord(std::move(pre)), BinaryWord(std::move(per))});
  return s;
}

SymbolStream SymbolStream::generated(SubstitutionRule rule, Symbol letter) {
  if (!rule.is_binary()) throw std::domain_error("generated streams need a binary substitution");
  const Word& img = rule.image(letter);
  if (img.front() != letter || img.size() < 2) {
    throw std::logic_error("generated stream: image of the prefix letter must begin with it and grow");
  }
  SymbolStream s;
  s.kind_ = Kind::Generated;
  s.lazy_ = std::make_shared<Lazy>();
  s.lazy_->rule = std::make_unique<SubstitutionRule>(rule);
  s.lazy_->letter = letter;
  s.lazy_->description = "fixed point of " + rule.spell(rule.image(0)) + "," + rule.spell(rule.image(1)) +
                         " from " + std::to_string(letter);
  s.lazy_->produce = [rule = std::move(rule), letter](std::size_t n) {
    return fixed_point_prefix_word(rule, letter, n);
  };
  return s;
}

SymbolStream SymbolStream::derived(std::string description, PrefixFunction fn) {
  SymbolStream s;
  s.kind_ = Kind::Derived;
  s.lazy_ = std::make_shared<Lazy>();
  s.lazy_->description = std::move(description);
  s.lazy_->produce = std::move(fn);
  return s;
}

bool SymbolStream::is_periodic() const {
  return is_eventually_periodic() && periodic_->preperiod.empty();
}

const BinaryWord& SymbolStream::preperiod() const {
  if (!is_eventually_periodic()) throw std::logic_error("stream is not eventually periodic");
  return periodic_->preperiod;
}

const BinaryWord& SymbolStream::period() const {
  if (!is_eventually_periodic()) throw std::logic_error("stream is not eventually periodic");
  return periodic_->period;
}

const SubstitutionRule& SymbolStream::rule() const {
  if (kind_ != Kind::Generated) throw std::logic_error("stream is not generated by a substitution");
  return *lazy_->rule;
}

Symbol SymbolStream::prefix_letter() const {
  if (kind_ != Kind::Generated) throw std::logic_error("stream is not generated by a substitution");
  return lazy_->letter;
}

Symbol SymbolStream::at(std::uint64_t k) const {
  if (k == 0) throw std::out_of_range("stream index is 1-based");
  if (is_eventually_periodic()) {
    const auto& pre = periodic_->preperiod;
    const auto& per = periodic_->period;
    if (k <= pre.size()) return pre.at(k);
    return per.at((k - pre.size() - 1) % per.size() + 1);
  }
  std::lock_guard lock(lazy_->mutex);
  lazy_->ensure(k);
  return lazy_->cache[k - 1];
}

BinaryWord SymbolStream::prefix(std::size_t n) const {
  if (is_eventually_periodic()) {
    std::vector<Symbol> out;
    out.reserve(n);
    auto pre = periodic_->preperiod.bits();
    auto per = periodic_->period.bits();
    for (std::size_t i = 0; i < n && i < pre.size(); ++i) out.push_back(pre[i]);
    for (std::size_t i = 0; out.size() < n; ++i) out.push_back(per[i % per.size()]);
    return BinaryWord(std::move(out));
  }
  std::lock_guard lock(lazy_->mutex);
  lazy_->ensure(n);
  return BinaryWord(std::vector<Symbol>(lazy_->cache.begin(), lazy_->cache.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::string SymbolStream::describe() const {
  if (is_eventually_periodic()) {
    return periodic_->preperiod.to_string() + "(" + periodic_->period.to_string() + ")";
  }
  return lazy_->description;
}

bool operator==(const SymbolStream& a, const SymbolStream& b) {
  if (!a.is_eventually_periodic() || !b.is_eventually_periodic()) {
    throw std::logic_error("equality is only decidable for eventually periodic streams");
  }
  return a.periodic_->preperiod == b.periodic_->preperiod && a.periodic_->period == b.periodic_->period;
}

// ---------------------------------------------------------------- operations

SymbolStream shift(const SymbolStream& s, std::uint64_t m) {
  if (m == 0) return s;
  if (s.is_eventually_periodic()) {
    const auto& pre = s.preperiod();
    const auto& per = s.period();
    if (m <= pre.size()) return SymbolStream::eventually_periodic(pre.drop(m), per);
    std::uint64_t r = (m - pre.size()) % per.size();
    return SymbolStream::periodic(per.drop(r) + per.prefix(r));
  }
  return SymbolStream::derived("shift(" + s.describe() + "," + std::to_string(m) + ")",
                               [s, m](std::size_t n) {
                                 auto w = s.prefix(n + m);
                                 auto bits = w.bits();
                                 return std::vector<Symbol>(bits.begin() + static_cast<std::ptrdiff_t>(m), bits.end());
                               });
}

SymbolStream decimate(const SymbolStream& s, bool complement) {
  const Symbol flip = complement ? 1 : 0;
  if (s.is_eventually_periodic()) {
    const std::size_t pre_len = s.preperiod().size();
    const std::size_t per_len = s.period().size();
    // Positions 2k <= pre_len are in the preperiod; afterwards 2k cycles with
    // period per_len / gcd(per_len, 2).
    const std::size_t out_pre = pre_len / 2;
    const std::size_t out_per = per_len / std::gcd(per_len, std::size_t{2});
    std::vector<Symbol> pre, per;
    for (std::size_t k = 1; k <= out_pre; ++k) pre.push_back(s.at(2 * k) ^ flip);
    for (std::size_t k = out_pre + 1; k <= out_pre + out_per; ++k) per.push_back(s.at(2 * k) ^ flip);
    return SymbolStream::eventually_periodic(BinaryWord(std::move(pre)), BinaryWord(std::move(per)));
  }
  return SymbolStream::derived(std::string(complement ? "R" : "even") + "(" + s.describe() + ")",
                               [s, flip](std::size_t n) {
                                 auto w = s.prefix(2 * n);
                                 std::vector<Symbol> out(n);
                                 for (std::size_t k = 1; k <= n; ++k) out[k - 1] = w.at(2 * k) ^ flip;
                                 return out;
                               });
}

SymbolStream renormalize_seq(const SymbolStream& s) { return decimate(s, true); }

BinaryWord feigenbaum_K(unsigned j, KMethod method) {
  if (j == 0) throw std::invalid_argument("K_j is defined for j >= 1");
  BinaryWord k = BinaryWord::parse("1");
  const auto phi = feigenbaum_substitution();
  for (unsigned level = 1; level < j; ++level) {
    switch (method) {
      case KMethod::DuplicateFlip: {
        BinaryWord twice = k + k;
        k = twice.flipped(twice.size());
        break;
      }
      case KMethod::IndexDoubling: {
        // Odd positions get 1, position 2i gets the complement of old s_i.
        std::vector<Symbol> next(2 * k.size(), 1);
        for (std::size_t i = 1; i <= k.size(); ++i) next[2 * i - 1] = k.at(i) ^ 1;
        k = BinaryWord(std::move(next));
        break;
      }
      case KMethod::Substitution:
        k = substitute(phi, k);
        break;
    }
  }
  return k;
}

SymbolStream feigenbaum_K_stream(unsigned j) { return SymbolStream::periodic(feigenbaum_K(j)); }

SymbolStream feigenbaum_K_infinity() { return SymbolStream::generated(feigenbaum_substitution(), 1); }

SymbolStream thue_morse_stream() { return SymbolStream::generated(thue_morse_substitution(), 0); }

nlohmann::json to_json(const SymbolStream& s) {
  using nlohmann::json;
  switch (s.kind()) {
    case SymbolStream::Kind::EventuallyPeriodic:
      return json{{"preperiod", s.preperiod().to_string()}, {"period", s.period().to_string()}};
    case SymbolStream::Kind::Generated: {
      const auto& rule = s.rule();
      json images = json::object();
      for (std::size_t a = 0; a < rule.alphabet_size(); ++a) {
        images[std::string(1, rule.letters()[a])] = rule.spell(rule.image(static_cast<Symbol>(a)));
      }
      return json{{"rule", images}, {"prefix", std::string(1, rule.letters()[s.prefix_letter()])}};
    }
    case SymbolStream::Kind::Derived:
      break;
  }
  throw std::logic_error("derived stream has no serial form: " + s.describe());
}

SymbolStream stream_from_json(const nlohmann::json& j) {
  if (j.contains("period")) {
    return SymbolStream::eventually_periodic(BinaryWord::parse(j.value("preperiod", std::string{})),
                                             BinaryWord::parse(j.at("period").get<std::string>()));
  }
  if (j.contains("rule")) {
    const auto& images = j.at("rule");
    std::vector<Word> words(2);
    for (const char* letter : {"0", "1"}) {
      const BinaryWord image = BinaryWord::parse(images.at(letter).get<std::string>());
      words[static_cast<std::size_t>(letter[0] - '0')] = Word(image.bits().begin(), image.bits().end());
    }
    auto prefix = BinaryWord::parse(j.at("prefix").get<std::string>());
    if (prefix.size() != 1) throw std::invalid_argument("prefix must be a single symbol");
    return SymbolStream::generated(SubstitutionRule("01", std::move(words)), prefix.at(1));
  }
  throw std::invalid_argument("stream JSON needs either \"period\" or \"rule\"");
}

}  // namespace kneading
