#include "qhh/hyperplane.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qhh {

namespace {

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw std::out_of_range("generator index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
  }
}

void check_sizes(const AlgebraSpec& spec, std::size_t got, const char* what) {
  if (got != spec.n()) {
    throw std::invalid_argument(std::string(what) + " has length " + std::to_string(got) + ", algebra has " +
                                std::to_string(spec.n()) + " generators");
  }
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> degrees) : MultiIndex(std::vector<int>(degrees)) {}

MultiIndex::MultiIndex(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int d : degrees_) {
    if (d < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
  }
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  check_index(i, n);
  MultiIndex k(n);
  k.degrees_[i] = 1;
  return k;
}

void MultiIndex::set(std::size_t i, int value) {
  if (value < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
  degrees_.at(i) = value;
}

int MultiIndex::total() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

std::size_t MultiIndex::support_size() const {
  return static_cast<std::size_t>(std::count_if(degrees_.begin(), degrees_.end(), [](int d) { return d > 0; }));
}

bool MultiIndex::dominates(const MultiIndex& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (degrees_[i] > other.degrees_[i]) return false;
  }
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.degrees_[i] += b.degrees_[i];
  return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.degrees_[i] -= b.degrees_[i];
    if (r.degrees_[i] < 0) throw std::domain_error("multi-index difference leaves ℕ^N");
  }
  return r;
}

ExteriorIndex::ExteriorIndex(std::initializer_list<int> bits) : ExteriorIndex(std::vector<int>(bits)) {}

ExteriorIndex::ExteriorIndex(std::vector<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("exterior index entries must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

int ExteriorIndex::degree() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

ExteriorIndex ExteriorIndex::with(std::size_t i) const {
  if (bits_.at(i) != 0) throw std::logic_error("wedge index already present");
  ExteriorIndex r = *this;
  r.bits_[i] = 1;
  return r;
}

ExteriorIndex ExteriorIndex::without(std::size_t i) const {
  if (bits_.at(i) == 0) throw std::logic_error("wedge index absent");
  ExteriorIndex r = *this;
  r.bits_[i] = 0;
  return r;
}

MultiIndex ExteriorIndex::as_multi_index() const {
  std::vector<int> d(bits_.begin(), bits_.end());
  return MultiIndex(std::move(d));
}

std::ostream& operator<<(std::ostream& out, const MultiIndex& a) {
  out << "(";
  for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
  return out << ")";
}

std::ostream& operator<<(std::ostream& out, const ExteriorIndex& b) {
  out << "(";
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << (b[i] ? 1 : 0);
  return out << ")";
}

AlgebraSpec::AlgebraSpec(std::size_t n, AlgebraMode mode, std::vector<std::string> symbols,
                         std::vector<QCoefficient> upper)
    : n_(n), mode_(mode), symbols_(std::move(symbols)), q_(n * n, QCoefficient::one()) {
  if (n == 0) throw std::invalid_argument("an algebra needs at least one generator");
  if (upper.size() != n * (n - 1) / 2) {
    throw std::invalid_argument("expected " + std::to_string(n * (n - 1) / 2) + " parameters q_ij");
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      const auto& value = upper[k];
      if (value.is_zero()) throw std::invalid_argument("parameters q_ij must be nonzero");
      if (mode == AlgebraMode::numeric && !value.is_numeric()) {
        throw std::invalid_argument("numeric algebra with a symbolic parameter");
      }
      for (const auto& [id, power] : value.monomial().entries()) {
        if (id < 0 || static_cast<std::size_t>(id) >= symbols_.size()) {
          throw std::invalid_argument("parameter refers to an unknown symbol");
        }
      }
      q_[pair_slot(i, j)] = value;
      q_[pair_slot(j, i)] = value.inverse();
    }
  }
}

std::size_t AlgebraSpec::pair_slot(std::size_t i, std::size_t j) const { return i * n_ + j; }

const QCoefficient& AlgebraSpec::q(std::size_t i, std::size_t j) const {
  check_index(i, n_);
  check_index(j, n_);
  return q_[pair_slot(i, j)];
}

AlgebraSpec AlgebraSpec::generic_symbolic(std::size_t n) {
  std::vector<std::string> symbols;
  std::vector<QCoefficient> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      upper.push_back(QCoefficient::symbol(static_cast<SymbolId>(symbols.size())));
      symbols.push_back("q_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return AlgebraSpec(n, AlgebraMode::symbolic, std::move(symbols), std::move(upper));
}

AlgebraSpec AlgebraSpec::one_parameter_symbolic(std::size_t n, std::string symbol) {
  std::vector<QCoefficient> upper(n * (n - 1) / 2, QCoefficient::symbol(0, -1));
  return AlgebraSpec(n, AlgebraMode::symbolic, {std::move(symbol)}, std::move(upper));
}

AlgebraSpec AlgebraSpec::quantum_plane_symbolic(std::string symbol) {
  return AlgebraSpec(2, AlgebraMode::symbolic, {std::move(symbol)}, {QCoefficient::symbol(0)});
}

AlgebraSpec AlgebraSpec::numeric(std::size_t n,
                                 const std::map<std::pair<std::size_t, std::size_t>, Rational>& q) {
  std::vector<QCoefficient> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto it = q.find({i, j});
      if (it == q.end()) {
        throw std::invalid_argument("missing numeric value for q_" + std::to_string(i + 1) + std::to_string(j + 1));
      }
      upper.emplace_back(it->second);
    }
  }
  for (const auto& [key, value] : q) {
    if (key.first >= key.second || key.second >= n) {
      throw std::invalid_argument("numeric parameters must be given for pairs i < j within range");
    }
  }
  return AlgebraSpec(n, AlgebraMode::numeric, {}, std::move(upper));
}

AlgebraSpec AlgebraSpec::one_parameter_numeric(std::size_t n, const Rational& q) {
  if (sgn(q) == 0) throw std::invalid_argument("q must be nonzero");
  std::vector<QCoefficient> upper(n * (n - 1) / 2, QCoefficient(Rational(1) / q));
  return AlgebraSpec(n, AlgebraMode::numeric, {}, std::move(upper));
}

AlgebraSpec AlgebraSpec::prime_multiparameter(std::size_t n) {
  auto symbolic = generic_symbolic(n);
  return symbolic.specialized(symbolic.prime_assignment());
}

bool AlgebraSpec::has_independent_pair_symbols() const {
  if (mode_ != AlgebraMode::symbolic) return false;
  std::set<SymbolId> seen;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const auto& c = q(i, j);
      if (c.scalar() != 1 || c.monomial().entries().size() != 1) return false;
      const auto& [id, power] = c.monomial().entries().front();
      if ((power != 1 && power != -1) || !seen.insert(id).second) return false;
    }
  }
  return true;
}

NumericAssignment AlgebraSpec::prime_assignment() const {
  NumericAssignment nu;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    nu.set(static_cast<SymbolId>(k), Rational(nth_prime(static_cast<int>(k))));
  }
  return nu;
}

AlgebraSpec AlgebraSpec::specialized(const NumericAssignment& nu) const {
  std::vector<QCoefficient> upper;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) upper.emplace_back(qc_specialize(q(i, j), nu));
  }
  return AlgebraSpec(n_, AlgebraMode::numeric, {}, std::move(upper));
}

ScalingAutomorphism::ScalingAutomorphism(std::vector<QCoefficient> p) : p_(std::move(p)) {
  for (const auto& value : p_) {
    if (value.is_zero()) throw std::invalid_argument("scaling automorphism entries must be nonzero");
  }
}

ScalingAutomorphism ScalingAutomorphism::identity(std::size_t n) {
  return ScalingAutomorphism(std::vector<QCoefficient>(n, QCoefficient::one()));
}

ScalingAutomorphism ScalingAutomorphism::specialized(const NumericAssignment& nu) const {
  std::vector<QCoefficient> p;
  p.reserve(p_.size());
  for (const auto& value : p_) p.emplace_back(qc_specialize(value, nu));
  return ScalingAutomorphism(std::move(p));
}

QCoefficient commutation_factor(const AlgebraSpec& spec, const MultiIndex& gamma, std::size_t i) {
  check_index(i, spec.n());
  check_sizes(spec, gamma.size(), "multi-index");
  // Moving x_i leftward past x_k (k > i) costs q_ki per factor; rewriting
  // x_i x_k (k < i) as x_k x_i costs q_ik per factor, i.e. q_ki on the other side.
  QCoefficient c = QCoefficient::one();
  for (std::size_t k = 0; k < spec.n(); ++k) {
    if (k != i && gamma[k] != 0) c *= spec.q(k, i).pow(gamma[k]);
  }
  return c;
}

Monomial normal_order(const AlgebraSpec& spec, const std::vector<std::size_t>& word) {
  std::vector<std::size_t> w = word;
  for (auto g : w) check_index(g, spec.n());
  QCoefficient c = QCoefficient::one();
  // Insertion sort by adjacent transpositions; x_a x_b = q_ab x_b x_a.
  for (std::size_t s = 1; s < w.size(); ++s) {
    for (std::size_t j = s; j > 0 && w[j - 1] > w[j]; --j) {
      c *= spec.q(w[j - 1], w[j]);
      std::swap(w[j - 1], w[j]);
    }
  }
  MultiIndex exponent(spec.n());
  for (auto g : w) exponent.set(g, exponent[g] + 1);
  return {c, exponent};
}

Monomial multiply(const AlgebraSpec& spec, const MultiIndex& a, const MultiIndex& b) {
  check_sizes(spec, a.size(), "multi-index");
  check_sizes(spec, b.size(), "multi-index");
  // Each x_l from b passes every x_k (k > l) from a: x_k x_l = q_kl x_l x_k.
  QCoefficient c = QCoefficient::one();
  for (std::size_t l = 0; l < spec.n(); ++l) {
    if (b[l] == 0) continue;
    for (std::size_t k = l + 1; k < spec.n(); ++k) {
      if (a[k] != 0) c *= spec.q(k, l).pow(static_cast<std::int64_t>(a[k]) * b[l]);
    }
  }
  return {c, a + b};
}

QCoefficient apply_sigma(const ScalingAutomorphism& sigma, const MultiIndex& alpha) {
  if (sigma.size() != alpha.size()) throw std::invalid_argument("automorphism/multi-index length mismatch");
  QCoefficient c = QCoefficient::one();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) c *= sigma.p(i).pow(alpha[i]);
  }
  return c;
}

ScalingAutomorphism canonical_automorphism(const AlgebraSpec& spec) {
  return solve_automorphism_for_top(spec, MultiIndex(spec.n()));
}

ScalingAutomorphism solve_automorphism_for_top(const AlgebraSpec& spec, const MultiIndex& alpha) {
  check_sizes(spec, alpha.size(), "multi-index");
  std::vector<QCoefficient> p;
  p.reserve(spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    QCoefficient value = QCoefficient::one();
    for (std::size_t j = 0; j < spec.n(); ++j) value *= spec.q(j, i).pow(alpha[j] + 1);
    p.push_back(std::move(value));
  }
  return ScalingAutomorphism(std::move(p));
}

bool sigma_commutes_at(const AlgebraSpec& spec, const MultiIndex& gamma, std::size_t i,
                       const ScalingAutomorphism& sigma) {
  check_index(i, spec.n());
  if (sigma.size() != spec.n()) throw std::invalid_argument("automorphism/algebra size mismatch");
  return commutation_factor(spec, gamma, i) == sigma.p(i);
}

bool in_c_sigma(const AlgebraSpec& spec, const MultiIndex& gamma, const ScalingAutomorphism& sigma) {
  check_sizes(spec, gamma.size(), "multi-index");
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if (gamma[i] != 0 && !sigma_commutes_at(spec, gamma, i, sigma)) return false;
  }
  return true;
}

NumericAssignment faithful_prime_assignment(const AlgebraSpec& spec, const ScalingAutomorphism& sigma) {
  std::vector<mpz_class> scalars;
  auto collect = [&](const QCoefficient& c) {
    scalars.push_back(abs(c.scalar().get_num()));
    scalars.push_back(c.scalar().get_den());
  };
  for (std::size_t i = 0; i < spec.n(); ++i) {
    for (std::size_t j = i + 1; j < spec.n(); ++j) collect(spec.q(i, j));
  }
  for (const auto& p : sigma.values()) collect(p);

  NumericAssignment nu;
  int k = 0;
  for (std::size_t id = 0; id < spec.symbols().size(); ++id) {
    for (;; ++k) {
      const mpz_class prime = nth_prime(k);
      bool divides = std::any_of(scalars.begin(), scalars.end(),
                                 [&](const mpz_class& s) { return mpz_divisible_p(s.get_mpz_t(), prime.get_mpz_t()) != 0; });
      if (!divides) break;
    }
    nu.set(static_cast<SymbolId>(id), Rational(nth_prime(k++)));
  }
  return nu;
}

GenericityVerdict is_generic(const AlgebraSpec& spec, int bound) {
  if (bound < 2) throw std::invalid_argument("genericity search bound must be at least 2");
  GenericityVerdict verdict;
  verdict.bound = bound;
  verdict.structural = spec.has_independent_pair_symbols();
  if (verdict.structural) return verdict;
  for (int total = 2; total <= bound; ++total) {
    for (const auto& gamma : multi_indices_of_degree(spec.n(), total)) {
      if (gamma.support_size() < 2) continue;
      bool central = true;
      for (std::size_t i = 0; i < spec.n() && central; ++i) {
        if (gamma[i] != 0) central = commutation_factor(spec, gamma, i).is_one();
      }
      if (central) {
        verdict.generic = false;
        verdict.witness = gamma;
        return verdict;
      }
    }
  }
  return verdict;
}

namespace {

void compositions(std::size_t n, std::size_t pos, int remaining, std::vector<int>& current,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int d = remaining; d >= 0; --d) {
    current[pos] = d;
    compositions(n, pos + 1, remaining - d, current, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, int total) {
  std::vector<MultiIndex> out;
  if (n == 0 || total < 0) return out;
  std::vector<int> current(n, 0);
  compositions(n, 0, total, current, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int bound) {
  std::vector<MultiIndex> out;
  for (int total = 0; total <= bound; ++total) {
    auto layer = multi_indices_of_degree(n, total);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace qhh
