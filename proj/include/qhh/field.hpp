#pragma once

// Coefficient fields for the Koszul complex. Ω is a difference of two
// monomials and ω its inverse, so chain coefficients leave the monomial group:
// numeric algebras use exact rationals, symbolic algebras use fractions of
// Laurent polynomials in the parameter symbols.

#include "qhh/qscalar.hpp"

#include <concepts>
#include <map>
#include <string>
#include <vector>

namespace qhh {

/// Finite sum of QCoefficient terms, keyed by monomial. No zero terms stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const QCoefficient& term);

  bool is_zero() const { return terms_.empty(); }
  /// A single term c·m (which is then invertible in place).
  bool is_monomial() const { return terms_.size() == 1; }
  QCoefficient leading_term() const;
  const std::map<QExponent, Rational>& terms() const { return terms_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string(const std::vector<std::string>& symbols) const;

 private:
  void add_term(const QExponent& m, const Rational& c);
  std::map<QExponent, Rational> terms_;
};

/// numerator / denominator with a nonzero denominator. Not reduced by gcd;
/// monomial denominators are folded into the numerator.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const QCoefficient& c) : num_(c), den_(QCoefficient::one()) {}
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  bool is_zero() const { return num_.is_zero(); }
  RationalFunction inverse() const;

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string(const std::vector<std::string>& symbols) const;

 private:
  void normalize();
  LaurentPolynomial num_;
  LaurentPolynomial den_{QCoefficient::one()};
};

/// Exact rationals; only numeric coefficients embed.
struct NumericField {
  using value_type = Rational;
  static value_type embed(const QCoefficient& c);
  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static value_type inverse(const value_type& a);
  static std::string to_string(const value_type& a, const std::vector<std::string>&) { return qhh::to_string(a); }
};

/// Rational functions in the parameter symbols.
struct SymbolicField {
  using value_type = RationalFunction;
  static value_type embed(const QCoefficient& c) { return RationalFunction(c); }
  static bool is_zero(const value_type& a) { return a.is_zero(); }
  static value_type inverse(const value_type& a) { return a.inverse(); }
  static std::string to_string(const value_type& a, const std::vector<std::string>& symbols) {
    return a.to_string(symbols);
  }
};

template <class F>
concept CoefficientField = requires(const typename F::value_type& a, const QCoefficient& c) {
  { F::embed(c) } -> std::same_as<typename F::value_type>;
  { F::is_zero(a) } -> std::same_as<bool>;
  { F::inverse(a) } -> std::same_as<typename F::value_type>;
  { a + a } -> std::convertible_to<typename F::value_type>;
  { a - a } -> std::convertible_to<typename F::value_type>;
  { a * a } -> std::convertible_to<typename F::value_type>;
};

}  // namespace qhh
