#pragma once

// Exact coefficients in the multiplicative group generated by the deformation
// parameters, over the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhh {

using Rational = mpq_class;

/// Index into an algebra's parameter symbol table.
using SymbolId = int;

/// Sparse Laurent exponent vector over parameter symbols. Zero exponents are
/// never stored, so two exponents are equal iff their entry lists are equal.
class QExponent {
 public:
  using Entry = std::pair<SymbolId, std::int64_t>;

  QExponent() = default;
  static QExponent symbol(SymbolId id, std::int64_t power = 1);

  std::int64_t operator[](SymbolId id) const;
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  QExponent& operator+=(const QExponent& other);
  QExponent& operator-=(const QExponent& other);
  QExponent operator-() const;
  QExponent scaled(std::int64_t factor) const;

  friend QExponent operator+(QExponent a, const QExponent& b) { return a += b; }
  friend QExponent operator-(QExponent a, const QExponent& b) { return a -= b; }
  friend bool operator==(const QExponent&, const QExponent&) = default;
  friend auto operator<=>(const QExponent&, const QExponent&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by symbol, no zero exponents
};

/// scalar × monomial. The canonical zero has an empty monomial.
class QCoefficient {
 public:
  QCoefficient() = default;  // zero
  QCoefficient(Rational scalar, QExponent monomial = {});
  QCoefficient(long scalar) : QCoefficient(Rational(scalar)) {}

  static QCoefficient one() { return QCoefficient(Rational(1)); }
  static QCoefficient symbol(SymbolId id, std::int64_t power = 1) {
    return QCoefficient(Rational(1), QExponent::symbol(id, power));
  }

  const Rational& scalar() const { return scalar_; }
  const QExponent& monomial() const { return monomial_; }

  bool is_zero() const { return sgn(scalar_) == 0; }
  bool is_one() const { return scalar_ == 1 && monomial_.is_zero(); }
  /// True when the coefficient carries no symbols (a plain rational).
  bool is_numeric() const { return monomial_.is_zero(); }

  /// Throws std::domain_error on zero.
  QCoefficient inverse() const;
  QCoefficient pow(std::int64_t exponent) const;

  QCoefficient& operator*=(const QCoefficient& other);
  friend QCoefficient operator*(QCoefficient a, const QCoefficient& b) { return a *= b; }

  friend bool operator==(const QCoefficient& a, const QCoefficient& b) {
    return a.scalar_ == b.scalar_ && a.monomial_ == b.monomial_;
  }
  friend std::strong_ordering operator<=>(const QCoefficient& a, const QCoefficient& b);

 private:
  Rational scalar_{0};
  QExponent monomial_;
};

QCoefficient qc_mul(const QCoefficient& a, const QCoefficient& b);
QCoefficient qc_inv(const QCoefficient& a);

/// Numeric values for parameter symbols. Values are nonzero.
class NumericAssignment {
 public:
  NumericAssignment() = default;
  void set(SymbolId id, Rational value);
  bool contains(SymbolId id) const { return values_.count(id) != 0; }
  const Rational& at(SymbolId id) const;
  const std::map<SymbolId, Rational>& values() const { return values_; }

 private:
  std::map<SymbolId, Rational> values_;
};

class MissingAssignment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational rational_pow(const Rational& base, std::int64_t exponent);

/// scalar × ∏ value^exponent. Throws MissingAssignment on an unassigned symbol.
Rational qc_specialize(const QCoefficient& a, const NumericAssignment& nu);

/// The k-th prime (k = 0 gives 2). Used for the canonical genericity model.
std::int64_t nth_prime(int k);

/// Parses an exact rational "p", "p/q", "-p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Renders "2*q_12^-1*q_13"; the zero coefficient renders as "0".
std::string to_string(const QCoefficient& a, const std::vector<std::string>& symbol_names);

/// Parses a product of rationals and symbols with optional integer powers,
/// e.g. "q^-1", "2*q_12*q_13^2", "-1/3". Unknown names are appended to
/// `symbol_names` when `allow_new_symbols` is set.
QCoefficient parse_coefficient(const std::string& text, std::vector<std::string>& symbol_names,
                               bool allow_new_symbols);

/// Coordinates for multiplicative logarithms of a finite family of
/// coefficients: one coordinate per symbol plus one per element of a
/// pairwise-coprime base of all scalar numerators and denominators. For
/// positive scalars, products of family members equal 1 iff the log vectors
/// sum to zero.
class LogBasis {
 public:
  explicit LogBasis(const std::vector<QCoefficient>& family);

  std::size_t dimension() const { return symbols_.size() + base_.size(); }
  /// Throws std::invalid_argument when the scalar is outside the base.
  std::vector<Rational> log(const QCoefficient& c) const;
  bool has_negative_scalar() const { return has_negative_; }

 private:
  std::vector<SymbolId> symbols_;
  std::vector<mpz_class> base_;
  bool has_negative_ = false;
};

}  // namespace qhh
