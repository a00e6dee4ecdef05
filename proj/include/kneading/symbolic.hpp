#pragma once

// Binary words, substitutions and their fixed points, one-sided symbol
// streams, the shift and sequence renormalization.
//
// Symbol indices are 1-based in every public accessor that takes a position
// (BinaryWord::at, SymbolStream::at): position 1 is s_1.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace kneading {

using Symbol = std::uint8_t;
/// Word over a small finite alphabet {0, ..., m-1}.
using Word = std::vector<Symbol>;

/// Finite word over {0,1}.
class BinaryWord {
 public:
  BinaryWord() = default;
  /// Throws std::invalid_argument if a symbol is not 0 or 1.
  explicit BinaryWord(std::vector<Symbol> bits);
  /// Parses an ASCII string of '0'/'1'.
  static BinaryWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  /// 1-based access, k in [1, size()].
  Symbol at(std::size_t k) const;
  std::span<const Symbol> bits() const { return bits_; }

  std::size_t popcount() const;
  BinaryWord prefix(std::size_t n) const;
  /// Symbols at positions k+1 .. size() (drops the first k).
  BinaryWord drop(std::size_t k) const;
  BinaryWord complement() const;
  /// Copy with the symbol at 1-based position k flipped.
  BinaryWord flipped(std::size_t k) const;
  bool is_prefix_of(const BinaryWord& other) const;

  void push_back(Symbol s);
  BinaryWord& operator+=(const BinaryWord& other);
  friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) { return a += b; }
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

  std::string to_string() const;

 private:
  std::vector<Symbol> bits_;
};

/// Substitution on the alphabet {0, ..., m-1}; images are nonempty words.
class SubstitutionRule {
 public:
  /// letters[i] is the display character of symbol i.
  SubstitutionRule(std::string letters, std::vector<Word> images);

  std::size_t alphabet_size() const { return images_.size(); }
  const Word& image(Symbol a) const;
  const std::string& letters() const { return letters_; }
  bool is_binary() const { return images_.size() == 2; }

  /// Word over the display letters, e.g. "ac".
  std::string spell(std::span<const Symbol> w) const;
  /// Inverse of spell. Throws std::domain_error for a letter not in the alphabet.
  Word read(std::string_view text) const;

  friend bool operator==(const SubstitutionRule&, const SubstitutionRule&) = default;

 private:
  std::string letters_;
  std::vector<Word> images_;
};

/// 1 -> 10, 0 -> 11.
SubstitutionRule feigenbaum_substitution();
/// 0 -> 01, 1 -> 10.
SubstitutionRule thue_morse_substitution();
/// a -> ac, b -> ad, c -> da, d -> db on the pair alphabet a=00, b=01, c=10, d=11.
SubstitutionRule pair_substitution();

/// Concatenation of images. Throws std::domain_error for a symbol outside the alphabet.
Word substitute(const SubstitutionRule& rule, std::span<const Symbol> w);
BinaryWord substitute(const SubstitutionRule& rule, const BinaryWord& w);

/// First n symbols of the fixed point of `rule` that begins with `letter`.
/// Throws std::logic_error if image(letter) does not start with letter or
/// has length 1 (no growth).
Word fixed_point_prefix_word(const SubstitutionRule& rule, Symbol letter, std::size_t n);
BinaryWord fixed_point_prefix(const SubstitutionRule& rule, Symbol letter, std::size_t n);

/// One-sided infinite sequence s_1 s_2 ... over {0,1}.
///
/// Eventually periodic streams are stored in canonical form: the period is
/// primitive and the preperiod is as short as possible, so two streams are
/// equal exactly when their canonical pieces are. Generated and derived
/// streams materialize their prefix on demand, doubling the cached length;
/// the cache is guarded by a mutex and may be shared by concurrent readers.
class SymbolStream {
 public:
  enum class Kind { EventuallyPeriodic, Generated, Derived };
  /// Produces the first n symbols.
  using PrefixFunction = std::function<std::vector<Symbol>(std::size_t n)>;

  static SymbolStream periodic(BinaryWord period);
  static SymbolStream eventually_periodic(BinaryWord preperiod, BinaryWord period);
  /// Fixed point of a binary rule starting with `letter`.
  static SymbolStream generated(SubstitutionRule rule, Symbol letter);
  static SymbolStream derived(std::string description, PrefixFunction fn);

  Kind kind() const { return kind_; }
  bool is_eventually_periodic() const { return kind_ == Kind::EventuallyPeriodic; }
  /// Purely periodic (empty preperiod).
  bool is_periodic() const;

  /// Canonical pieces; throw std::logic_error unless eventually periodic.
  const BinaryWord& preperiod() const;
  const BinaryWord& period() const;
  /// Substitution rule and prefix letter; throw unless generated.
  const SubstitutionRule& rule() const;
  Symbol prefix_letter() const;

  /// Symbol s_k, k >= 1.
  Symbol at(std::uint64_t k) const;
  BinaryWord prefix(std::size_t n) const;

  std::string describe() const;

  /// Structural equality; only defined for eventually periodic streams.
  friend bool operator==(const SymbolStream& a, const SymbolStream& b);

 private:
  struct Periodic;
  struct Lazy;
  SymbolStream() = default;

  Kind kind_ = Kind::EventuallyPeriodic;
  std::shared_ptr<const Periodic> periodic_;
  std::shared_ptr<Lazy> lazy_;
};

/// Left shift by m: result symbol k is s_{k+m}.
SymbolStream shift(const SymbolStream& s, std::uint64_t m);

/// Symbols at even positions: result symbol k is s_{2k}, complemented when
/// `complement` is set.
SymbolStream decimate(const SymbolStream& s, bool complement);

/// Sequence renormalization s_1 s_2 s_3 ... -> ŝ_2 ŝ_4 ŝ_6 ...
SymbolStream renormalize_seq(const SymbolStream& s);

enum class KMethod { DuplicateFlip, IndexDoubling, Substitution };

/// Repeating block of K_j (length 2^{j-1}, odd number of 1s), j >= 1.
BinaryWord feigenbaum_K(unsigned j, KMethod method = KMethod::DuplicateFlip);
/// K_j as a periodic stream.
SymbolStream feigenbaum_K_stream(unsigned j);
/// K_∞, the fixed point of 1 -> 10, 0 -> 11 starting with 1.
SymbolStream feigenbaum_K_infinity();

/// Thue–Morse fixed point starting with 0.
SymbolStream thue_morse_stream();

/// {"preperiod": "...", "period": "..."} or {"rule": {...}, "prefix": "1"}.
/// Derived streams cannot be serialized (std::logic_error).
nlohmann::json to_json(const SymbolStream& s);
SymbolStream stream_from_json(const nlohmann::json& j);

}  // namespace kneading
