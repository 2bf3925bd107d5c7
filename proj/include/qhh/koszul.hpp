#pragma once

// The reduced Koszul complex S_Q(V)_σ ⊗ Λ_Q^n(V) with basis x^α ⊗ x^β.
//
//   d(x^α ⊗ x^β) = Σ_{β(i)=1} Ω(α,β,i) x^{α+κ_i} ⊗ x^{β−κ_i}
//   h(x^α ⊗ x^β) = ||α+β||^{-1} Σ_i ω(α,β,i) x^{α−κ_i} ⊗ x^{β+κ_i}
//
// ||γ|| counts the indices i with γ(i) > 0 at which x^γ x_i ≠ σ(x_i) x^γ.
// With that normalization dh + hd is the identity off C_σ and zero on it.

#include "qhh/field.hpp"
#include "qhh/hyperplane.hpp"

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhh {

struct KoszulBasisElement {
  MultiIndex alpha;
  ExteriorIndex beta;

  MultiIndex multidegree() const { return alpha + beta.as_multi_index(); }
  int degree() const { return beta.degree(); }

  friend bool operator==(const KoszulBasisElement&, const KoszulBasisElement&) = default;
  friend auto operator<=>(const KoszulBasisElement&, const KoszulBasisElement&) = default;
};

std::ostream& operator<<(std::ostream& out, const KoszulBasisElement& e);

/// All x^α ⊗ x^β with α + β = γ and |β| = n, ordered by β.
std::vector<KoszulBasisElement> koszul_basis(const MultiIndex& gamma, int n);
/// All basis elements with |α+β| ≤ bound.
std::vector<KoszulBasisElement> koszul_basis_up_to(std::size_t n_generators, int bound);

/// Finite linear combination of basis elements, zero terms dropped.
template <CoefficientField F>
class KoszulChain {
 public:
  using value_type = typename F::value_type;

  KoszulChain() = default;
  KoszulChain(const KoszulBasisElement& e, value_type c) { add(e, std::move(c)); }

  void add(const KoszulBasisElement& e, const value_type& c) {
    if (F::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (F::is_zero(it->second)) terms_.erase(it);
    }
  }
  KoszulChain& operator+=(const KoszulChain& other) {
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
  }
  KoszulChain& operator-=(const KoszulChain& other) {
    for (const auto& [e, c] : other.terms_) add(e, value_type(F::embed(QCoefficient(-1)) * c));
    return *this;
  }
  friend KoszulChain operator+(KoszulChain a, const KoszulChain& b) { return a += b; }
  friend KoszulChain operator-(KoszulChain a, const KoszulChain& b) { return a -= b; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<KoszulBasisElement, value_type>& terms() const { return terms_; }

  /// Homological degree, or nullopt for the zero chain. Mixed degrees throw.
  std::optional<int> degree() const {
    std::optional<int> n;
    for (const auto& [e, c] : terms_) {
      if (n && *n != e.degree()) throw std::logic_error("Koszul chain mixes homological degrees");
      n = e.degree();
    }
    return n;
  }

 private:
  std::map<KoszulBasisElement, value_type> terms_;
};

struct KoszulCheckReport {
  bool passed = true;
  std::size_t elements_checked = 0;
  std::vector<KoszulBasisElement> violations;
};

/// Reduced Koszul complex for a fixed algebra and scaling automorphism.
template <CoefficientField F>
class KoszulComplex {
 public:
  using value_type = typename F::value_type;
  using Chain = KoszulChain<F>;

  KoszulComplex(AlgebraSpec spec, ScalingAutomorphism sigma) : spec_(std::move(spec)), sigma_(std::move(sigma)) {
    if (sigma_.size() != spec_.n()) throw std::invalid_argument("automorphism/algebra size mismatch");
  }

  const AlgebraSpec& spec() const { return spec_; }
  const ScalingAutomorphism& sigma() const { return sigma_; }

  /// Ω(α,β,i) = (−1)^{Σ_{s<i} β(s)} ( ∏_{s<i} q_si^{β(s)} ∏_{r>i} q_ir^{−α(r)}
  ///                                   − p_i ∏_{s>i} q_is^{β(s)} ∏_{r<i} q_ri^{−α(r)} )
  value_type omega_cap(const MultiIndex& alpha, const ExteriorIndex& beta, std::size_t i) const {
    check(alpha, beta, i);
    const std::size_t n = spec_.n();
    int sign_count = 0;
    QCoefficient right = QCoefficient::one();  // from m·x_i
    QCoefficient left = sigma_.p(i);           // from σ(x_i)·m
    for (std::size_t s = 0; s < n; ++s) {
      if (s < i) {
        if (beta[s]) {
          ++sign_count;
          right *= spec_.q(s, i);
        }
        if (alpha[s] != 0) left *= spec_.q(s, i).pow(-alpha[s]);
      } else if (s > i) {
        if (beta[s]) left *= spec_.q(i, s);
        if (alpha[s] != 0) right *= spec_.q(i, s).pow(-alpha[s]);
      }
    }
    value_type value = F::embed(right) - F::embed(left);
    if (sign_count % 2 != 0) value = F::embed(QCoefficient(-1)) * value;
    return value;
  }

  /// ω(α,β,i): zero if α+β ∈ C_σ, β(i) = 1, α(i) = 0, or σ commutes at i;
  /// otherwise Ω(α−κ_i, β+κ_i, i)^{-1}.
  value_type omega_small(const MultiIndex& alpha, const ExteriorIndex& beta, std::size_t i) const {
    check(alpha, beta, i);
    const auto gamma = alpha + beta.as_multi_index();
    if (beta[i] || alpha[i] == 0 || in_c_sigma(spec_, gamma, sigma_) || sigma_commutes_at(spec_, gamma, i, sigma_)) {
      return F::embed(QCoefficient{});
    }
    auto cap = omega_cap(alpha - MultiIndex::unit(spec_.n(), i), beta.with(i), i);
    if (F::is_zero(cap)) throw std::logic_error("ω requested the inverse of a vanishing Ω");
    return F::inverse(cap);
  }

  /// ||γ||: indices in the support of γ where σ-commutation fails.
  int homotopy_norm(const MultiIndex& gamma) const {
    int count = 0;
    for (std::size_t i = 0; i < spec_.n(); ++i) {
      if (gamma[i] != 0 && !sigma_commutes_at(spec_, gamma, i, sigma_)) ++count;
    }
    return count;
  }

  Chain differential(const KoszulBasisElement& e) const {
    Chain out;
    for (std::size_t i = 0; i < spec_.n(); ++i) {
      if (!e.beta[i]) continue;
      out.add({e.alpha + MultiIndex::unit(spec_.n(), i), e.beta.without(i)}, omega_cap(e.alpha, e.beta, i));
    }
    return out;
  }

  Chain differential(const Chain& c) const { return extend(c, [this](const auto& e) { return differential(e); }); }

  Chain homotopy(const KoszulBasisElement& e) const {
    Chain out;
    const auto gamma = e.multidegree();
    const int norm = homotopy_norm(gamma);
    if (norm == 0) return out;
    const auto scale = F::embed(QCoefficient(Rational(1, norm)));
    for (std::size_t i = 0; i < spec_.n(); ++i) {
      auto w = omega_small(e.alpha, e.beta, i);
      if (F::is_zero(w)) continue;
      out.add({e.alpha - MultiIndex::unit(spec_.n(), i), e.beta.with(i)}, value_type(scale * w));
    }
    return out;
  }

  Chain homotopy(const Chain& c) const { return extend(c, [this](const auto& e) { return homotopy(e); }); }

  /// Scaling action: x^α ⊗ x^β ↦ σ(x^{α+β}) x^α ⊗ x^β.
  Chain act(const Chain& c) const {
    Chain out;
    for (const auto& [e, coef] : c.terms()) {
      out.add(e, value_type(F::embed(apply_sigma(sigma_, e.multidegree())) * coef));
    }
    return out;
  }

  /// d∘d = 0 on every basis element with |α+β| ≤ bound.
  KoszulCheckReport check_d_squared(int bound) const {
    KoszulCheckReport report;
    for (const auto& e : koszul_basis_up_to(spec_.n(), bound)) {
      ++report.elements_checked;
      if (!differential(differential(e)).is_zero()) {
        report.passed = false;
        report.violations.push_back(e);
      }
    }
    return report;
  }

  /// (dh + hd)(e) = e off C_σ and 0 on C_σ, for every |α+β| ≤ bound.
  KoszulCheckReport check_homotopy_identity(int bound) const {
    KoszulCheckReport report;
    for (const auto& e : koszul_basis_up_to(spec_.n(), bound)) {
      ++report.elements_checked;
      Chain basis_chain(e, F::embed(QCoefficient::one()));
      Chain result = differential(homotopy(basis_chain)) + homotopy(differential(basis_chain));
      Chain expected = in_c_sigma(spec_, e.multidegree(), sigma_) ? Chain{} : basis_chain;
      if (!(result - expected).is_zero()) {
        report.passed = false;
        report.violations.push_back(e);
      }
    }
    return report;
  }

 private:
  void check(const MultiIndex& alpha, const ExteriorIndex& beta, std::size_t i) const {
    if (i >= spec_.n()) throw std::out_of_range("generator index outside the algebra");
    if (alpha.size() != spec_.n() || beta.size() != spec_.n()) {
      throw std::invalid_argument("Koszul index length does not match the algebra");
    }
  }

  template <class Map>
  Chain extend(const Chain& c, Map&& map) const {
    Chain out;
    for (const auto& [e, coef] : c.terms()) {
      const Chain image_chain = map(e);
      for (const auto& [image, image_coef] : image_chain.terms()) out.add(image, value_type(coef * image_coef));
    }
    return out;
  }

  AlgebraSpec spec_;
  ScalingAutomorphism sigma_;
};

using NumericKoszul = KoszulComplex<NumericField>;
using SymbolicKoszul = KoszulComplex<SymbolicField>;

}  // namespace qhh
