#include "kneading/frequency.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "kneading/feigenbaum.hpp"

namespace kneading {

IncidenceMatrix incidence(const SubstitutionRule& rule) {
  const std::size_t n = rule.letters().size();
  IncidenceMatrix m{rule.letters(), IntMatrix(n, std::vector<Integer>(n, Integer(0)))};
  for (std::size_t j = 0; j < n; ++j) {
    for (Symbol i : rule.image(static_cast<Symbol>(j))) m.entries[i][j] += 1;
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned n) {
  IntMatrix r(m.size(), std::vector<Integer>(m.size(), Integer(0)));
  for (std::size_t i = 0; i < m.size(); ++i) r[i][i] = 1;
  for (unsigned k = 0; k < n; ++k) r = multiply(r, m);
  return r;
}

IntMatrix counted_power(const SubstitutionRule& rule, unsigned n) {
  const std::size_t size = rule.letters().size();
  IntMatrix c(size, std::vector<Integer>(size, Integer(0)));
  for (std::size_t j = 0; j < size; ++j) {
    Word w{static_cast<Symbol>(j)};
    for (unsigned k = 0; k < n; ++k) w = substitute(rule, w);
    for (Symbol i : w) c[i][j] += 1;
  }
  return c;
}

std::vector<Integer> characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k) / k.
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix mk(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c[n - k + 1];
    mk = multiply(m, shifted);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += mk[i][i];
    c[n - k] = -trace / Integer(static_cast<unsigned long>(k));
  }
  return c;
}

namespace {

Integer evaluate_poly(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// Synthetic division by (x - r).
std::vector<Integer> deflate(const std::vector<Integer>& c, const Integer& r) {
  std::vector<Integer> q(c.size() - 1);
  Integer carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = carry * r + c[k];
    q[k - 1] = carry;
  }
  return q;
}

Integer max_column_sum(const IntMatrix& m) {
  Integer best = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += abs(m[i][j]);
    best = std::max(best, s);
  }
  return best;
}

// Nonzero vector spanning the kernel of A, or nothing when the kernel is not
// one-dimensional.
std::optional<std::vector<Rational>> kernel_vector(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[row][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() != n - 1) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> v(n, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col] / a[r][pivot_col[r]];
  return v;
}

}  // namespace

std::vector<Integer> integer_eigenvalues(const IntMatrix& m) {
  std::vector<Integer> c = characteristic_polynomial(m);
  const Integer bound = max_column_sum(m);
  std::vector<Integer> roots;
  for (Integer r = bound; r >= -bound; --r) {
    while (c.size() > 1 && evaluate_poly(c, r) == 0) {
      roots.push_back(r);
      c = deflate(c, r);
    }
  }
  return roots;
}

bool is_primitive(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  std::vector<std::vector<bool>> b(n, std::vector<bool>(n)), p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = m[i][j] != 0;
  p = b;
  const std::size_t wielandt = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= wielandt; ++k) {
    bool positive = true;
    for (auto& r : p)
      for (bool x : r) positive = positive && x;
    if (positive) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (p[i][l])
          for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] || b[l][j];
    p = std::move(next);
  }
  return false;
}

LetterFrequencies letter_frequencies(const SubstitutionRule& rule) {
  const IntMatrix m = incidence(rule).entries;
  if (!is_primitive(m)) throw std::domain_error("incidence matrix is not primitive (no power is strictly positive)");
  LetterFrequencies out;
  out.eigenvalues = integer_eigenvalues(m);
  const std::size_t n = m.size();
  for (const Integer& lambda : out.eigenvalues) {
    if (lambda <= 0) continue;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j] - (i == j ? lambda : Integer(0)));
    auto v = kernel_vector(a);
    if (!v) continue;
    Rational total = 0;
    for (const auto& x : *v) total += x;
    if (total == 0) continue;
    for (auto& x : *v) x /= total;
    if (!std::all_of(v->begin(), v->end(), [](const Rational& x) { return x > 0; })) continue;
    out.eigenvalue = lambda;
    out.frequencies = std::move(*v);
    return out;
  }
  throw std::domain_error("leading eigenvalue of the incidence matrix is not an integer");
}

std::vector<Rational> empirical_frequencies(const SymbolStream& s, std::size_t block, std::size_t N,
                                            BlockAlignment alignment) {
  if (block == 0 || block > 16) throw std::invalid_argument("block length must lie in 1..16");
  if (N < block) throw std::invalid_argument("prefix shorter than the block length");
  BinaryWord w = s.prefix(N);
  auto bits = w.bits();
  const std::size_t step = alignment == BlockAlignment::Sliding ? 1 : block;
  std::vector<std::uint64_t> counts(std::size_t{1} << block, 0);
  std::uint64_t windows = 0;
  for (std::size_t start = 0; start + block <= N; start += step) {
    std::size_t value = 0;
    for (std::size_t i = 0; i < block; ++i) value = (value << 1) | bits[start + i];
    ++counts[value];
    ++windows;
  }
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (auto c : counts) out.push_back(make_rational(Integer(static_cast<unsigned long>(c)),
                                                     Integer(static_cast<unsigned long>(windows))));
  return out;
}

Rational max_deviation(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vectors differ in length");
  Rational best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max<Rational>(best, abs(a[i] - b[i]));
  return best;
}

NormalityReport normality_report(std::size_t N) {
  if (N < 2) throw std::invalid_argument("prefix must hold at least one pair");
  NormalityReport r;
  r.prefix = N;
  SymbolStream digits = tau_infinity_digits().digits;
  r.aligned_pairs = empirical_frequencies(digits, 2, N, BlockAlignment::Aligned);
  r.sliding_pairs = empirical_frequencies(digits, 2, N, BlockAlignment::Sliding);
  r.predicted = letter_frequencies(pair_substitution()).frequencies;
  r.deviation_from_uniform = max_deviation(r.aligned_pairs, std::vector<Rational>(4, Rational(1, 4)));
  r.deviation_from_predicted = max_deviation(r.aligned_pairs, r.predicted);
  return r;
}

std::vector<ConvergenceRow> frequency_convergence(unsigned kmin, unsigned kmax) {
  if (kmin > kmax || kmax > 24) throw std::invalid_argument("need kmin <= kmax <= 24");
  const auto target = letter_frequencies(feigenbaum_substitution()).frequencies;
  SymbolStream k = feigenbaum_K_infinity();
  std::vector<ConvergenceRow> rows;
  for (unsigned e = kmin; e <= kmax; ++e) {
    std::size_t n = std::size_t{1} << e;
    rows.push_back({n, max_deviation(empirical_frequencies(k, 1, n), target)});
  }
  return rows;
}

}  // namespace kneading
