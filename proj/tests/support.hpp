#pragma once

// Independent reference implementations and random generators shared by the
// unit tests. Nothing here calls the code path it is used to check.

#include "qhh/field.hpp"
#include "qhh/hyperplane.hpp"

#include <random>
#include <vector>

namespace qhh::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240917);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// a/b in lowest terms; mpq_class(a, b) alone does not canonicalize.
inline Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline MultiIndex random_multi_index(std::size_t n, int max_entry) {
  std::vector<int> d(n);
  for (auto& x : d) x = uniform(0, max_entry);
  return MultiIndex(d);
}

inline ExteriorIndex random_exterior_index(std::size_t n) {
  std::vector<int> d(n);
  for (auto& x : d) x = uniform(0, 1);
  return ExteriorIndex(d);
}

inline Rational random_nonzero_rational(int span = 7) {
  int num = 0;
  while (num == 0) num = uniform(-span, span);
  return ratio(num, uniform(1, span));
}

inline QCoefficient random_coefficient(int symbols, bool allow_zero = false) {
  if (allow_zero && uniform(0, 9) == 0) return QCoefficient{};
  QExponent m;
  for (int s = 0; s < symbols; ++s) m += QExponent::symbol(s, uniform(-3, 3));
  return QCoefficient(random_nonzero_rational(), m);
}

/// Normal form by applying the relation x_b x_a = q_ba x_a x_b (b > a) to a
/// randomly chosen out-of-order adjacent pair until the word is sorted.
inline Monomial reference_normal_order(const AlgebraSpec& spec, std::vector<std::size_t> word) {
  QCoefficient c = QCoefficient::one();
  for (;;) {
    std::vector<std::size_t> descents;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) descents.push_back(k);
    }
    if (descents.empty()) break;
    std::size_t k = descents[static_cast<std::size_t>(uniform(0, static_cast<int>(descents.size()) - 1))];
    c *= spec.q(word[k], word[k + 1]);
    std::swap(word[k], word[k + 1]);
  }
  MultiIndex e(spec.n());
  for (auto g : word) e.set(g, e[g] + 1);
  return {c, e};
}

/// The word x_1^{γ_1} ⋯ x_N^{γ_N}.
inline std::vector<std::size_t> word_of(const MultiIndex& gamma) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < gamma.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(gamma[i]), i);
  return w;
}

/// C_σ membership from first principles: compare normal forms of x^γ x_i and
/// σ(x_i) x^γ for each i in the support.
inline bool reference_in_c_sigma(const AlgebraSpec& spec, const MultiIndex& gamma, const ScalingAutomorphism& sigma) {
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if (gamma[i] == 0) continue;
    auto left = word_of(gamma);
    left.push_back(i);
    auto right = word_of(gamma);
    right.insert(right.begin(), i);
    auto l = reference_normal_order(spec, left);
    auto r = reference_normal_order(spec, right);
    if (!(l.coefficient == sigma.p(i) * r.coefficient)) return false;
  }
  return true;
}

inline Rational evaluate(const LaurentPolynomial& p, const NumericAssignment& nu) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) sum += qc_specialize(QCoefficient(c, m), nu);
  return sum;
}

inline Rational evaluate(const RationalFunction& f, const NumericAssignment& nu) {
  return evaluate(f.numerator(), nu) / evaluate(f.denominator(), nu);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace qhh::testing
