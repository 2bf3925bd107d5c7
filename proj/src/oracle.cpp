#include "qhh/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace qhh {

MultiIndex TensorBasisElement::multidegree() const {
  if (factors.empty()) return {};
  MultiIndex total = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) total = total + factors[k];
  return total;
}

void add_term(TensorChain& chain, const TensorBasisElement& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = chain.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) chain.erase(it);
  }
}

namespace {

AlgebraSpec numeric_spec(const AlgebraSpec& spec, const ScalingAutomorphism& sigma) {
  return spec.is_numeric() ? spec : spec.specialized(faithful_prime_assignment(spec, sigma));
}

ScalingAutomorphism numeric_sigma(const AlgebraSpec& spec, const ScalingAutomorphism& sigma) {
  if (sigma.size() != spec.n()) throw std::invalid_argument("automorphism/algebra size mismatch");
  if (spec.is_numeric()) {
    for (const auto& p : sigma.values()) {
      if (!p.is_numeric()) throw std::invalid_argument("symbolic automorphism for a numeric algebra");
    }
    return sigma;
  }
  return sigma.specialized(faithful_prime_assignment(spec, sigma));
}

// All sub-multi-indices a ≤ remaining.
void for_each_below(const MultiIndex& remaining, const std::function<void(const MultiIndex&)>& visit) {
  MultiIndex current(remaining.size());
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == remaining.size()) {
      visit(current);
      return;
    }
    for (int d = 0; d <= remaining[pos]; ++d) {
      current.set(pos, d);
      self(self, pos + 1);
    }
    current.set(pos, 0);
  };
  recurse(recurse, 0);
}

unsigned worker_count(unsigned requested, std::size_t tasks) {
  unsigned hw = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(tasks, 1)));
}

}  // namespace

HochschildOracle::HochschildOracle(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, OracleOptions options)
    : spec_(numeric_spec(spec, sigma)), sigma_(numeric_sigma(spec, sigma)), options_(options) {}

std::optional<std::vector<TensorBasisElement>> HochschildOracle::basis(int n, const MultiIndex& gamma) const {
  if (gamma.size() != spec_.n()) throw std::invalid_argument("multidegree length does not match the algebra");
  std::vector<TensorBasisElement> out;
  if (n < 0) return out;
  const bool normalized = options_.model == ChainModel::normalized;
  if (normalized && n > gamma.total()) return out;

  std::vector<MultiIndex> factors(static_cast<std::size_t>(n) + 1);
  bool capped = false;
  auto recurse = [&](auto&& self, std::size_t pos, const MultiIndex& remaining) -> void {
    if (capped) return;
    if (pos == factors.size() - 1) {
      if (pos > 0 && normalized && remaining.is_zero()) return;
      factors[pos] = remaining;
      out.push_back({factors});
      if (out.size() > options_.max_basis) capped = true;
      return;
    }
    for_each_below(remaining, [&](const MultiIndex& a) {
      if (capped) return;
      if (pos > 0 && normalized && a.is_zero()) return;
      factors[pos] = a;
      self(self, pos + 1, remaining - a);
    });
  };
  recurse(recurse, 0, gamma);
  if (capped) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

TensorChain HochschildOracle::boundary(const TensorBasisElement& e) const {
  TensorChain out;
  const int n = e.degree();
  if (n < 1) return out;
  const bool normalized = options_.model == ChainModel::normalized;
  auto emit = [&](std::vector<MultiIndex> factors, const Rational& c) {
    if (normalized) {
      for (std::size_t k = 1; k < factors.size(); ++k) {
        if (factors[k].is_zero()) return;  // degenerate, zero in the normalized quotient
      }
    }
    add_term(out, {std::move(factors)}, c);
  };
  const auto& f = e.factors;
  for (int i = 0; i < n; ++i) {
    auto product = multiply(spec_, f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i) + 1]);
    std::vector<MultiIndex> factors;
    factors.reserve(f.size() - 1);
    for (int k = 0; k < i; ++k) factors.push_back(f[static_cast<std::size_t>(k)]);
    factors.push_back(product.exponent);
    for (int k = i + 2; k <= n; ++k) factors.push_back(f[static_cast<std::size_t>(k)]);
    Rational c = product.coefficient.scalar();
    emit(std::move(factors), i % 2 == 0 ? c : Rational(-c));
  }
  // Last face through the bimodule rule: a_n acts on the left of a_0 via σ.
  const auto& last = f[static_cast<std::size_t>(n)];
  auto product = multiply(spec_, last, f[0]);
  Rational c = apply_sigma(sigma_, last).scalar() * product.coefficient.scalar();
  std::vector<MultiIndex> factors;
  factors.push_back(product.exponent);
  for (int k = 1; k < n; ++k) factors.push_back(f[static_cast<std::size_t>(k)]);
  emit(std::move(factors), n % 2 == 0 ? c : Rational(-c));
  return out;
}

TensorChain HochschildOracle::boundary(const TensorChain& c) const {
  TensorChain out;
  for (const auto& [e, coef] : c) {
    for (const auto& [image, image_coef] : boundary(e)) add_term(out, image, Rational(coef * image_coef));
  }
  return out;
}

linalg::SparseExactMatrix HochschildOracle::twisted_boundary(int n, const MultiIndex& gamma) const {
  if (n < 1) throw std::invalid_argument("the boundary starts at chain degree 1");
  auto source = basis(n, gamma);
  auto target = basis(n - 1, gamma);
  if (!source || !target) throw std::length_error("chain space exceeds the basis cap");
  std::map<TensorBasisElement, std::size_t> row_of;
  for (std::size_t r = 0; r < target->size(); ++r) row_of.emplace((*target)[r], r);
  linalg::SparseExactMatrix m(target->size(), source->size());
  for (std::size_t col = 0; col < source->size(); ++col) {
    for (const auto& [image, coef] : boundary((*source)[col])) m.add(row_of.at(image), col, coef);
  }
  return m;
}

Rational HochschildOracle::eigenvalue(const TensorBasisElement& e) const {
  Rational lambda = 1;
  for (const auto& a : e.factors) lambda *= apply_sigma(sigma_, a).scalar();
  return lambda;
}

std::map<Rational, TensorChain> HochschildOracle::eigen_decompose(const TensorChain& c) const {
  std::map<Rational, TensorChain> parts;
  for (const auto& [e, coef] : c) add_term(parts[eigenvalue(e)], e, coef);
  return parts;
}

std::optional<std::vector<std::size_t>> HochschildOracle::natural_homology_dims(int n_max,
                                                                                const MultiIndex& gamma) const {
  return all_dims(n_max, gamma).natural;
}

OracleDims HochschildOracle::all_dims(int n_max, const MultiIndex& gamma) const {
  OracleDims dims;
  const int top = n_max + 1;
  std::vector<std::vector<TensorBasisElement>> bases;
  for (int n = 0; n <= top; ++n) {
    auto b = basis(n, gamma);
    if (!b) {
      dims.skipped = true;
      return dims;
    }
    bases.push_back(std::move(*b));
  }
  // boundaries[n] : C_n → C_{n−1}; boundaries[0] is empty.
  std::vector<linalg::SparseExactMatrix> boundaries;
  boundaries.emplace_back(0, bases[0].size());
  for (int n = 1; n <= top; ++n) boundaries.push_back(twisted_boundary(n, gamma));

  std::vector<std::vector<std::size_t>> invariant_index(bases.size());
  std::vector<linalg::SparseExactMatrix> one_minus_sigma;
  for (std::size_t n = 0; n < bases.size(); ++n) {
    linalg::SparseExactMatrix d(bases[n].size(), bases[n].size());
    for (std::size_t k = 0; k < bases[n].size(); ++k) {
      Rational lambda = eigenvalue(bases[n][k]);
      if (lambda == 1) invariant_index[n].push_back(k);
      d.add(k, k, Rational(1 - lambda));
    }
    one_minus_sigma.push_back(std::move(d));
  }

  std::vector<std::size_t> natural_rank(bases.size(), 0);
  std::vector<std::size_t> invariant_rank(bases.size(), 0);
  std::vector<std::size_t> quotient_rank(bases.size(), 0);
  std::vector<std::size_t> image_rank(bases.size(), 0);
  for (std::size_t n = 0; n < bases.size(); ++n) image_rank[n] = linalg::rank(one_minus_sigma[n]);
  for (std::size_t n = 1; n < bases.size(); ++n) {
    natural_rank[n] = linalg::rank(boundaries[n]);
    invariant_rank[n] = linalg::rank(boundaries[n].submatrix(invariant_index[n - 1], invariant_index[n]));
    // rank of b̄ : C_n/I_n → C_{n−1}/I_{n−1} is dim(b C_n + I_{n−1}) − dim I_{n−1}.
    quotient_rank[n] =
        linalg::rank(linalg::SparseExactMatrix::hconcat(boundaries[n], one_minus_sigma[n - 1])) - image_rank[n - 1];
  }

  std::vector<std::size_t> natural;
  std::vector<std::size_t> invariant;
  std::vector<std::size_t> quotient;
  for (int n = 0; n <= n_max; ++n) {
    auto k = static_cast<std::size_t>(n);
    natural.push_back(bases[k].size() - natural_rank[k] - natural_rank[k + 1]);
    invariant.push_back(invariant_index[k].size() - invariant_rank[k] - invariant_rank[k + 1]);
    quotient.push_back(bases[k].size() - image_rank[k] - quotient_rank[k] - quotient_rank[k + 1]);
  }
  dims.natural = std::move(natural);
  dims.invariant = std::move(invariant);
  dims.quotient = std::move(quotient);
  return dims;
}

bool HochschildOracle::boundary_squares_to_zero(int n_max, const MultiIndex& gamma) const {
  for (int n = 2; n <= n_max + 1; ++n) {
    auto source = basis(n, gamma);
    if (!source || !basis(n - 1, gamma) || !basis(n - 2, gamma)) return true;
    if (!(twisted_boundary(n - 1, gamma) * twisted_boundary(n, gamma)).is_zero()) return false;
  }
  return true;
}

bool HochschildOracle::euler_characteristic_holds(const MultiIndex& gamma) const {
  if (options_.model != ChainModel::normalized) {
    throw std::logic_error("the unnormalized complex is unbounded; use the normalized model");
  }
  const int top = gamma.total();
  auto dims = natural_homology_dims(top, gamma);
  if (!dims) throw std::length_error("chain space exceeds the basis cap");
  long chain_sum = 0;
  long homology_sum = 0;
  for (int n = 0; n <= top; ++n) {
    long sign = n % 2 == 0 ? 1 : -1;
    chain_sum += sign * static_cast<long>(basis(n, gamma)->size());
    homology_sum += sign * static_cast<long>((*dims)[static_cast<std::size_t>(n)]);
  }
  return chain_sum == homology_sum;
}

BoundaryCheckReport check_b_squared(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n_max,
                                    int degree_bound, OracleOptions options) {
  HochschildOracle oracle(spec, sigma, options);
  BoundaryCheckReport report;
  for (const auto& gamma : multi_indices_up_to(spec.n(), degree_bound)) {
    ++report.cells_checked;
    if (!oracle.boundary_squares_to_zero(n_max, gamma)) {
      report.passed = false;
      report.violations.push_back(gamma);
    }
  }
  return report;
}

ComparisonReport compare_with_koszul(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n_max,
                                     int degree_bound, OracleOptions options) {
  HochschildOracle oracle(spec, sigma, options);
  auto gammas = multi_indices_up_to(spec.n(), degree_bound);
  std::vector<OracleDims> results(gammas.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < gammas.size(); k = next++) results[k] = oracle.all_dims(n_max, gammas[k]);
  };
  std::vector<std::thread> workers;
  unsigned count = worker_count(options.threads, gammas.size());
  for (unsigned t = 1; t < count; ++t) workers.emplace_back(work);
  work();
  for (auto& w : workers) w.join();

  ComparisonReport report;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    for (int n = 0; n <= n_max; ++n) {
      ComparisonCell cell;
      cell.gamma = gammas[k];
      cell.n = n;
      cell.natural_koszul = natural_koszul_count(spec, sigma, n, gammas[k]);
      cell.invariant_koszul = invariant_koszul_count(spec, sigma, n, gammas[k]);
      cell.skipped = results[k].skipped;
      if (!cell.skipped) {
        auto idx = static_cast<std::size_t>(n);
        cell.natural_oracle = (*results[k].natural)[idx];
        cell.invariant_oracle = (*results[k].invariant)[idx];
        cell.quotient_oracle = (*results[k].quotient)[idx];
      }
      if (cell.skipped) ++report.skipped;
      if (!cell.agrees()) ++report.mismatches;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace qhh
