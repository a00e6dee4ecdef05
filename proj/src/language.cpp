#include "kneading/language.hpp"

#include <cmath>
#include <sstream>

namespace kneading {

std::string to_string(LanguageMode m) { return m == LanguageMode::Core ? "core" : "full"; }

namespace {

// Depth-first enumeration. For every start m of a suffix the state records
// whether the suffix's τ digits still tie with the upper (resp. lower) bound.
class Enumerator {
 public:
  Enumerator(const LanguageQuery& q, std::size_t depth) : depth_(depth), lower_enabled_(q.mode == LanguageMode::Core) {
    if (q.nmax == 0 && depth == 0) throw std::invalid_argument("nmax must be positive");
    if (depth > kMaxLanguageLength) {
      throw EnumerationTooLarge("word length " + std::to_string(depth) + " exceeds the limit of " +
                                std::to_string(kMaxLanguageLength) + " (up to 2^" + std::to_string(depth) +
                                " words to visit)");
    }
    if (is_maximal(q.K, 256) == Tristate::False) {
      throw std::invalid_argument("kneading sequence " + q.K.describe() + " is not maximal");
    }
    BinaryWord k = q.K.prefix(depth + 1);
    BinaryWord up = xi(k.prefix(depth));
    BinaryWord low = xi(k.drop(1));
    upper_.assign(depth + 1, 0);
    lower_.assign(depth + 1, 0);
    for (std::size_t i = 1; i <= depth; ++i) {
      upper_[i] = up.at(i);
      lower_[i] = low.at(i);
    }
    parity_.assign(depth + 1, 0);
    word_.assign(depth, 0);
    tie_up_.assign(depth, 0);
    tie_low_.assign(depth, 0);
    counts_.assign(depth + 1, 0);
  }

  void run(std::vector<BinaryWord>* collect) {
    collect_ = collect;
    visit(0);
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  void visit(std::size_t n) {
    if (n == depth_) {
      if (collect_) collect_->emplace_back(word_);
      return;
    }
    const auto saved_up = tie_up_;
    const auto saved_low = tie_low_;
    for (Symbol s : {Symbol{0}, Symbol{1}}) {
      if (++nodes_ > kLanguageNodeBudget) {
        std::ostringstream msg;
        msg << "enumeration exceeded " << kLanguageNodeBudget << " nodes at length " << n + 1
            << "; p(" << n << ") = " << counts_[n] << ", estimated cost for length " << depth_ << " about 2^"
            << static_cast<int>(std::log2(double(counts_[n] + 1)) * double(depth_) / double(std::max<std::size_t>(n, 1)))
            << " nodes";
        throw EnumerationTooLarge(msg.str());
      }
      if (extend(n, s)) {
        ++counts_[n + 1];
        visit(n + 1);
      }
      tie_up_ = saved_up;
      tie_low_ = saved_low;
    }
  }

  // Appends s at position n+1; false if some suffix leaves the window.
  bool extend(std::size_t n, Symbol s) {
    word_[n] = s;
    parity_[n + 1] = parity_[n] ^ s;
    tie_up_[n] = 1;
    tie_low_[n] = lower_enabled_ ? 1 : 0;
    for (std::size_t m = 0; m <= n; ++m) {
      const std::size_t k = n + 1 - m;
      const Symbol d = parity_[n + 1] ^ parity_[m];
      if (tie_up_[m]) {
        if (d > upper_[k]) return false;
        if (d < upper_[k]) tie_up_[m] = 0;
      }
      if (tie_low_[m]) {
        if (d < lower_[k]) return false;
        if (d > lower_[k]) tie_low_[m] = 0;
      }
    }
    return true;
  }

  std::size_t depth_;
  bool lower_enabled_;
  std::vector<Symbol> upper_, lower_, parity_, word_;
  std::vector<std::uint8_t> tie_up_, tie_low_;
  std::vector<std::uint64_t> counts_;
  std::vector<BinaryWord>* collect_ = nullptr;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<std::uint64_t> complexity(const LanguageQuery& q) {
  if (q.nmax == 0) throw std::invalid_argument("nmax must be positive");
  Enumerator e(q, q.nmax);
  e.run(nullptr);
  return {e.counts().begin() + 1, e.counts().end()};
}

std::vector<BinaryWord> admissible_words(const LanguageQuery& q, std::size_t n) {
  if (n == 0) return {BinaryWord()};
  Enumerator e(q, n);
  std::vector<BinaryWord> out;
  e.run(&out);
  return out;
}

std::vector<BinaryWord> forbidden_words(const TDigits& t, std::size_t nmax) {
  BinaryWord digits = t.prefix(nmax);
  BinaryWord s = xi_inverse(digits);
  std::vector<BinaryWord> out;
  for (std::size_t j = 1; j <= nmax; ++j) {
    if (digits.at(j) == 0) out.push_back(s.prefix(j).flipped(j));
  }
  return out;
}

bool contains_factor(const BinaryWord& w, const BinaryWord& factor) {
  if (factor.size() > w.size()) return false;
  for (std::size_t m = 0; m + factor.size() <= w.size(); ++m) {
    bool match = true;
    for (std::size_t i = 1; i <= factor.size() && match; ++i) match = w.at(m + i) == factor.at(i);
    if (match) return true;
  }
  return false;
}

}  // namespace kneading
