#pragma once

// Twisted Hochschild homology of S_Q(V) read off the reduced Koszul complex:
// HH_n is spanned by x^α ⊗ x^β with |β| = n and α + β ∈ C_σ.

#include "qhh/hyperplane.hpp"
#include "qhh/koszul.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qhh {

/// Members of C_σ with |γ| ≤ bound. `complete` means no member has larger
/// degree, so the set is all of C_σ.
struct CSigmaSet {
  std::vector<MultiIndex> members;
  int bound = 0;
  bool complete = false;
  /// Largest |γ| any member can have, when that was proven.
  std::optional<int> certified_max_degree;

  bool contains(const MultiIndex& gamma) const;
};

/// Order used for every list of multi-indices in reports: by total degree,
/// then lexicographically decreasing.
bool degree_then_lex_less(const MultiIndex& a, const MultiIndex& b);

/// Brute-force scan of all γ with |γ| ≤ bound.
CSigmaSet enumerate_c_sigma(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int bound);

/// Upper bound on |γ| over all of C_σ, or nullopt when finiteness could not
/// be shown. Linearizes the commutation conditions in multiplicative-log
/// coordinates and bounds the resulting polyhedron per support set.
std::optional<int> certify_c_sigma_finite(const AlgebraSpec& spec, const ScalingAutomorphism& sigma);

/// Solver for the one-parameter hyperplane with its canonical automorphism:
/// per support S, the antisymmetric ±1 system A γ = (N − 2i + 1)_i restricted
/// to rows and columns in S, with γ > 0 on S.
CSigmaSet one_parameter_c_sigma(std::size_t n, int bound);

struct HomologyGroup {
  int n = 0;
  std::vector<KoszulBasisElement> generators;
  /// Multidegree γ ↦ number of generators in that multidegree.
  std::map<MultiIndex, std::size_t> grading;

  std::size_t betti() const { return generators.size(); }
};

struct HomologyReport {
  std::vector<HomologyGroup> groups;  // n = 0..n_max
  CSigmaSet c_sigma;
  int bound = 0;
  bool truncated = false;

  std::size_t betti(int n) const;
};

/// Generators (γ − β, β) with γ ∈ C_σ, |γ| ≤ bound, |β| = n, β ≤ γ.
HomologyGroup homology_basis(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n, int bound);
HomologyGroup homology_basis(const CSigmaSet& c_sigma, std::size_t n_generators, int n);

HomologyReport homology_report(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int bound, int n_max);

/// Dimension of the natural twisted homology at (n, γ): size of the Koszul
/// basis there if γ ∈ C_σ, else 0.
std::size_t natural_koszul_count(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n,
                                 const MultiIndex& gamma);
/// Same for the σ-invariant Koszul subcomplex: the natural count when σ
/// fixes the whole multidegree-γ component, else 0.
std::size_t invariant_koszul_count(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n,
                                   const MultiIndex& gamma);

/// Split of a σ-scaled space into its invariant part and the image of 1 − σ.
struct EigenSplit {
  std::size_t dimension = 0;
  std::size_t invariant_dimension = 0;  // eigenvalue 1
  std::size_t image_dimension = 0;      // rank of 1 − σ
  std::map<QCoefficient, std::size_t> multiplicities;

  bool is_direct_sum() const { return invariant_dimension + image_dimension == dimension; }
};

/// `eigenvalues` lists σ on a basis. The image rank is computed as the rank
/// of diag(1 − λ), independently of the eigenvalue count.
EigenSplit eigen_split(const AlgebraSpec& spec, const std::vector<QCoefficient>& eigenvalues);

/// Eigen split of the Koszul chain space K_n in multidegree γ.
EigenSplit quotient_equals_invariant_witness(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n,
                                             const MultiIndex& gamma);

}  // namespace qhh
