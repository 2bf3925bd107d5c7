#pragma once

// The quantum hyperplane S_Q(V): relations x_i x_j = q_ij x_j x_i (i < j),
// q_ii = 1, q_ji = q_ij^{-1}. Generators are indexed from 0 in the API and
// printed from 1.

#include "qhh/qscalar.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qhh {

/// α ∈ ℕ^N.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : degrees_(n, 0) {}
  MultiIndex(std::initializer_list<int> degrees);
  explicit MultiIndex(std::vector<int> degrees);

  static MultiIndex unit(std::size_t n, std::size_t i);  // κ_i

  std::size_t size() const { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  void set(std::size_t i, int value);
  const std::vector<int>& degrees() const { return degrees_; }

  int total() const;
  std::size_t support_size() const;
  bool is_zero() const { return total() == 0; }
  /// Componentwise ≤.
  bool dominates(const MultiIndex& other) const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// Throws std::domain_error if a component would become negative.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> degrees_;
};

/// β ∈ {0,1}^N, read as x_{i_1} ∧ ⋯ ∧ x_{i_n} with i_1 < ⋯ < i_n.
class ExteriorIndex {
 public:
  ExteriorIndex() = default;
  explicit ExteriorIndex(std::size_t n) : bits_(n, 0) {}
  ExteriorIndex(std::initializer_list<int> bits);
  explicit ExteriorIndex(std::vector<int> bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  int degree() const;

  /// β + κ_i and β − κ_i. Leaving {0,1}^N is a logic error.
  ExteriorIndex with(std::size_t i) const;
  ExteriorIndex without(std::size_t i) const;
  MultiIndex as_multi_index() const;

  friend bool operator==(const ExteriorIndex&, const ExteriorIndex&) = default;
  friend auto operator<=>(const ExteriorIndex&, const ExteriorIndex&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& out, const MultiIndex& a);
std::ostream& operator<<(std::ostream& out, const ExteriorIndex& b);

enum class AlgebraMode { symbolic, numeric };

/// N generators and the parameters q_ij for i < j, each an exact
/// coefficient over the symbol table (plain rationals in numeric mode).
class AlgebraSpec {
 public:
  /// One independent symbol q_ij per pair.
  static AlgebraSpec generic_symbolic(std::size_t n);
  /// A single symbol q with x_i x_j = q x_j x_i for i > j, i.e. q_ij = q^{-1}
  /// for i < j.
  static AlgebraSpec one_parameter_symbolic(std::size_t n, std::string symbol = "q");
  /// xy = q yx.
  static AlgebraSpec quantum_plane_symbolic(std::string symbol = "q");
  /// Numeric values for all pairs, keyed by 0-based (i, j) with i < j.
  static AlgebraSpec numeric(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Rational>& q);
  /// Numeric one-parameter algebra, same convention as one_parameter_symbolic.
  static AlgebraSpec one_parameter_numeric(std::size_t n, const Rational& q);
  /// Multiparameter algebra with q_ij set to distinct primes.
  static AlgebraSpec prime_multiparameter(std::size_t n);
  /// General constructor: `upper` lists q_ij row by row for i < j.
  AlgebraSpec(std::size_t n, AlgebraMode mode, std::vector<std::string> symbols,
              std::vector<QCoefficient> upper);

  std::size_t n() const { return n_; }
  AlgebraMode mode() const { return mode_; }
  bool is_numeric() const { return mode_ == AlgebraMode::numeric; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// q_ij for any pair, with q_ii = 1 and q_ji = q_ij^{-1}.
  const QCoefficient& q(std::size_t i, std::size_t j) const;

  /// True when every q_ij is its own distinct symbol, which makes the
  /// algebra generic by construction.
  bool has_independent_pair_symbols() const;

  /// Symbol k ↦ k-th prime.
  NumericAssignment prime_assignment() const;
  /// Numeric copy with every coefficient evaluated under `nu`.
  AlgebraSpec specialized(const NumericAssignment& nu) const;

  std::string describe(const QCoefficient& c) const { return to_string(c, symbols_); }

 private:
  std::size_t pair_slot(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  AlgebraMode mode_ = AlgebraMode::symbolic;
  std::vector<std::string> symbols_;
  std::vector<QCoefficient> q_;  // full N×N table
};

/// σ(x_i) = p_i x_i.
class ScalingAutomorphism {
 public:
  ScalingAutomorphism() = default;
  /// Throws std::invalid_argument on a zero entry.
  explicit ScalingAutomorphism(std::vector<QCoefficient> p);
  static ScalingAutomorphism identity(std::size_t n);

  std::size_t size() const { return p_.size(); }
  const QCoefficient& p(std::size_t i) const { return p_.at(i); }
  const std::vector<QCoefficient>& values() const { return p_; }
  ScalingAutomorphism specialized(const NumericAssignment& nu) const;

  friend bool operator==(const ScalingAutomorphism&, const ScalingAutomorphism&) = default;

 private:
  std::vector<QCoefficient> p_;
};

/// A normal-ordered monomial c · x^α.
struct Monomial {
  QCoefficient coefficient;
  MultiIndex exponent;
};

/// The c with x^γ · x_i = c · x_i · x^γ, namely ∏_k q_ki^{γ(k)}.
QCoefficient commutation_factor(const AlgebraSpec& spec, const MultiIndex& gamma, std::size_t i);

/// Sorts a word of generator indices into x_1^{a_1} ⋯ x_N^{a_N}.
Monomial normal_order(const AlgebraSpec& spec, const std::vector<std::size_t>& word);

/// x^a · x^b in normal form.
Monomial multiply(const AlgebraSpec& spec, const MultiIndex& a, const MultiIndex& b);

/// ∏_i p_i^{α(i)}.
QCoefficient apply_sigma(const ScalingAutomorphism& sigma, const MultiIndex& alpha);

/// p_i = ∏_j q_ji.
ScalingAutomorphism canonical_automorphism(const AlgebraSpec& spec);

/// p_i = ∏_j q_ji^{α(j)+1}: makes x^α ⊗ x_1 ∧ ⋯ ∧ x_N a top class.
ScalingAutomorphism solve_automorphism_for_top(const AlgebraSpec& spec, const MultiIndex& alpha);

/// x^γ x_i = σ(x_i) x^γ.
bool sigma_commutes_at(const AlgebraSpec& spec, const MultiIndex& gamma, std::size_t i,
                       const ScalingAutomorphism& sigma);

/// For every i: γ(i) = 0 or sigma_commutes_at(γ, i).
bool in_c_sigma(const AlgebraSpec& spec, const MultiIndex& gamma, const ScalingAutomorphism& sigma);

struct GenericityVerdict {
  bool generic = true;
  /// Set when every q_ij is an independent symbol; no search was needed.
  bool structural = false;
  int bound = 0;
  std::optional<MultiIndex> witness;
};

/// Distinct primes for the symbols, skipping every prime that divides a
/// numerator or denominator of some q_ij or p_i. Then a product of these
/// coefficients specializes to 1 only if it is 1 symbolically.
NumericAssignment faithful_prime_assignment(const AlgebraSpec& spec, const ScalingAutomorphism& sigma);

/// Bounded search for γ with at least two nonzero entries, |γ| ≤ bound, and
/// ∏_k q_ki^{γ(k)} = 1 for every i in the support of γ.
GenericityVerdict is_generic(const AlgebraSpec& spec, int bound);

/// All γ ∈ ℕ^n with |γ| = total, in lexicographically decreasing order of
/// (γ(1), γ(2), ...).
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, int total);
/// All γ with |γ| ≤ bound, by total degree then as above.
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int bound);

}  // namespace qhh
