#pragma once

// Letter and block frequencies of substitution fixed points: incidence
// matrices, exact Perron-Frobenius eigenvectors and empirical counts.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kneading/rational.hpp"
#include "kneading/symbolic.hpp"

namespace kneading {

using IntMatrix = std::vector<std::vector<Integer>>;

/// M[i][j] = number of occurrences of letter i in the image of letter j.
struct IncidenceMatrix {
  std::string letters;
  IntMatrix entries;

  std::size_t size() const { return entries.size(); }
};

IncidenceMatrix incidence(const SubstitutionRule& rule);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& m, unsigned n);

/// N_i(φ^n(j)) counted on the expanded words.
IntMatrix counted_power(const SubstitutionRule& rule, unsigned n);

/// Coefficients of det(λI - M), ascending, via Faddeev-LeVerrier.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);

/// Integer roots of the characteristic polynomial with multiplicity, descending.
std::vector<Integer> integer_eigenvalues(const IntMatrix& m);

/// Some power of M (up to the Wielandt bound) is strictly positive.
bool is_primitive(const IntMatrix& m);

struct LetterFrequencies {
  Integer eigenvalue;                ///< Perron-Frobenius eigenvalue
  std::vector<Integer> eigenvalues;  ///< integer characteristic roots
  std::vector<Rational> frequencies; ///< positive, sums to 1, M v = λ v
};

/// Throws std::domain_error if M is not primitive or its leading eigenvalue
/// is not an integer.
LetterFrequencies letter_frequencies(const SubstitutionRule& rule);

enum class BlockAlignment {
  Sliding,  ///< every position 1 .. N - B + 1
  Aligned   ///< positions 1, B + 1, 2B + 1, … (non-overlapping blocks)
};

/// Frequencies of the 2^B binary blocks (block value read with s_1 most
/// significant) among the windows of the first N symbols.
std::vector<Rational> empirical_frequencies(const SymbolStream& s, std::size_t block, std::size_t N,
                                            BlockAlignment alignment = BlockAlignment::Sliding);

/// Max-norm distance between two vectors of equal length.
Rational max_deviation(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct NormalityReport {
  std::size_t prefix = 0;
  std::vector<Rational> aligned_pairs;   ///< f_00, f_01, f_10, f_11 over aligned pairs
  std::vector<Rational> sliding_pairs;   ///< same over all windows
  std::vector<Rational> predicted;       ///< eigenvector of the pair substitution
  Rational deviation_from_uniform;       ///< aligned pairs vs 1/4
  Rational deviation_from_predicted;     ///< aligned pairs vs prediction
  bool non_normal() const { return deviation_from_uniform > deviation_from_predicted; }
};

/// Pair statistics of the τ_∞ digits on the first N digits.
NormalityReport normality_report(std::size_t N);

struct ConvergenceRow {
  std::size_t prefix;
  Rational deviation;
};

/// Letter-frequency deviation of K_∞ from its eigenvector at N = 2^k.
std::vector<ConvergenceRow> frequency_convergence(unsigned kmin, unsigned kmax);

}  // namespace kneading
