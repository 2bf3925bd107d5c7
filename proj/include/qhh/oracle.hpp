#pragma once

// Ground truth for the Koszul answer: the twisted Hochschild complex
// C_n = A_σ ⊗ A^{⊗n} with
//
//   b(a_0 ⊗ ⋯ ⊗ a_n) = Σ_{i<n} (−1)^i a_0 ⊗ ⋯ ⊗ a_i a_{i+1} ⊗ ⋯ ⊗ a_n
//                      + (−1)^n σ(a_n) a_0 ⊗ a_1 ⊗ ⋯ ⊗ a_{n−1},
//
// truncated to one multidegree γ at a time (b preserves multidegree) and
// reduced to exact rank computations. Symbolic algebras are evaluated with
// q-symbols at distinct primes.

#include "qhh/exactlinalg.hpp"
#include "qhh/homology.hpp"
#include "qhh/hyperplane.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace qhh {

/// x^{α_0} ⊗ x^{α_1} ⊗ ⋯ ⊗ x^{α_n}.
struct TensorBasisElement {
  std::vector<MultiIndex> factors;

  int degree() const { return static_cast<int>(factors.size()) - 1; }
  MultiIndex multidegree() const;

  friend bool operator==(const TensorBasisElement&, const TensorBasisElement&) = default;
  friend auto operator<=>(const TensorBasisElement&, const TensorBasisElement&) = default;
};

using TensorChain = std::map<TensorBasisElement, Rational>;

void add_term(TensorChain& chain, const TensorBasisElement& e, const Rational& c);

enum class ChainModel {
  /// Factors a_1..a_n are non-constant monomials: C_n(γ) = 0 for n > |γ|.
  normalized,
  /// All tuples of monomials.
  unnormalized,
};

struct OracleOptions {
  ChainModel model = ChainModel::normalized;
  /// Cells whose chain space exceeds this many basis tensors are skipped.
  std::size_t max_basis = 20000;
  /// Worker threads for per-cell work; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct OracleDims {
  std::optional<std::vector<std::size_t>> natural;
  std::optional<std::vector<std::size_t>> invariant;
  std::optional<std::vector<std::size_t>> quotient;
  bool skipped = false;
};

class HochschildOracle {
 public:
  HochschildOracle(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, OracleOptions options = {});

  /// The numeric algebra and automorphism the oracle computes with.
  const AlgebraSpec& spec() const { return spec_; }
  const ScalingAutomorphism& sigma() const { return sigma_; }
  const OracleOptions& options() const { return options_; }

  /// Basis of C_n(γ) in lexicographic order of the factor tuple, or nullopt
  /// when larger than the cap.
  std::optional<std::vector<TensorBasisElement>> basis(int n, const MultiIndex& gamma) const;

  TensorChain boundary(const TensorBasisElement& e) const;
  TensorChain boundary(const TensorChain& c) const;

  /// Matrix of b : C_n(γ) → C_{n−1}(γ), n ≥ 1, in the basis order above.
  linalg::SparseExactMatrix twisted_boundary(int n, const MultiIndex& gamma) const;

  /// σ(a_0) ⊗ ⋯ ⊗ σ(a_n) = λ a_0 ⊗ ⋯ ⊗ a_n.
  Rational eigenvalue(const TensorBasisElement& e) const;
  /// Components of c by σ-eigenvalue.
  std::map<Rational, TensorChain> eigen_decompose(const TensorChain& c) const;

  /// dim H_n for n = 0..n_max of the natural complex; nullopt if capped.
  std::optional<std::vector<std::size_t>> natural_homology_dims(int n_max, const MultiIndex& gamma) const;
  /// Invariant subcomplex and quotient by the image of 1 − σ.
  OracleDims all_dims(int n_max, const MultiIndex& gamma) const;

  /// b ∘ b = 0 from C_n(γ) for 2 ≤ n ≤ n_max + 1. Capped cells count as passing.
  bool boundary_squares_to_zero(int n_max, const MultiIndex& gamma) const;

  /// Σ_n (−1)^n dim C_n(γ) = Σ_n (−1)^n dim H_n(γ). Normalized model only.
  bool euler_characteristic_holds(const MultiIndex& gamma) const;

 private:
  AlgebraSpec spec_;
  ScalingAutomorphism sigma_;
  OracleOptions options_;
};

struct ComparisonCell {
  MultiIndex gamma;
  int n = 0;
  bool skipped = false;
  std::size_t natural_oracle = 0;
  std::size_t invariant_oracle = 0;
  std::size_t quotient_oracle = 0;
  std::size_t natural_koszul = 0;
  std::size_t invariant_koszul = 0;

  bool agrees() const {
    return skipped || (natural_oracle == natural_koszul && invariant_oracle == invariant_koszul &&
                       quotient_oracle == invariant_oracle);
  }
};

struct ComparisonReport {
  std::vector<ComparisonCell> cells;  // by γ in report order, then n
  std::size_t mismatches = 0;
  std::size_t skipped = 0;

  bool all_agree() const { return mismatches == 0; }
};

struct BoundaryCheckReport {
  bool passed = true;
  std::size_t cells_checked = 0;
  std::vector<MultiIndex> violations;
};

/// boundary_squares_to_zero over every |γ| ≤ degree_bound.
BoundaryCheckReport check_b_squared(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n_max,
                                    int degree_bound, OracleOptions options = {});

/// Every multidegree |γ| ≤ degree_bound and every n ≤ n_max: oracle
/// dimensions against the Koszul counts of the original (possibly symbolic)
/// algebra.
ComparisonReport compare_with_koszul(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n_max,
                                     int degree_bound, OracleOptions options = {});

}  // namespace qhh
