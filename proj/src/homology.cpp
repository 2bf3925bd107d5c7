#include "qhh/homology.hpp"

#include "qhh/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qhh {

bool CSigmaSet::contains(const MultiIndex& gamma) const {
  return std::find(members.begin(), members.end(), gamma) != members.end();
}

bool degree_then_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a > b;
}

std::size_t HomologyReport::betti(int n) const {
  for (const auto& g : groups) {
    if (g.n == n) return g.betti();
  }
  return 0;
}

CSigmaSet enumerate_c_sigma(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int bound) {
  if (bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  CSigmaSet set;
  set.bound = bound;
  for (const auto& gamma : multi_indices_up_to(spec.n(), bound)) {
    if (in_c_sigma(spec, gamma, sigma)) set.members.push_back(gamma);
  }
  set.certified_max_degree = certify_c_sigma_finite(spec, sigma);
  set.complete = set.certified_max_degree && *set.certified_max_degree <= bound;
  return set;
}

namespace {

using linalg::DenseMatrix;
using linalg::Vector;

std::vector<std::size_t> bits_of(unsigned mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (mask & (1U << k)) out.push_back(k);
  }
  return out;
}

DenseMatrix select_columns(const DenseMatrix& m, const std::vector<std::size_t>& cols) {
  DenseMatrix out(m.size(), Vector(cols.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out[r][c] = m[r][cols[c]];
  }
  return out;
}

// For P = {δ ≥ 0 : M δ = r} over |S| variables: nullopt if P is unbounded,
// -1 if P is empty, else floor(max Σδ). The maximum of a linear function
// over a pointed polyhedron sits at a basic feasible solution.
std::optional<long> polyhedron_max_sum(const DenseMatrix& m, const Vector& r, std::size_t vars) {
  bool feasible = false;
  long best = -1;
  for (unsigned mask = 0; mask < (1U << vars); ++mask) {
    auto cols = bits_of(mask, vars);
    std::optional<linalg::AffineSolution> sol;
    if (cols.empty()) {
      if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; })) {
        sol = linalg::AffineSolution{};
      }
    } else {
      sol = linalg::solve(select_columns(m, cols), r, cols.size());
      if (sol && !sol->kernel.empty()) continue;  // columns dependent, not a basis
    }
    if (!sol) continue;
    if (!std::all_of(sol->particular.begin(), sol->particular.end(), [](const Rational& x) { return sgn(x) >= 0; })) {
      continue;
    }
    feasible = true;
    Rational sum = std::accumulate(sol->particular.begin(), sol->particular.end(), Rational(0));
    mpz_class floor_sum;
    mpz_fdiv_q(floor_sum.get_mpz_t(), sum.get_num_mpz_t(), sum.get_den_mpz_t());
    best = std::max(best, floor_sum.get_si());
  }
  if (!feasible) return -1;
  // Unbounded iff some column subset T has a one-dimensional kernel spanned
  // by a strictly one-signed vector (an extreme ray of the recession cone).
  for (unsigned mask = 1; mask < (1U << vars); ++mask) {
    auto cols = bits_of(mask, vars);
    auto kernel = linalg::kernel_basis(select_columns(m, cols), cols.size());
    if (kernel.size() != 1) continue;
    const auto& v = kernel.front();
    bool positive = std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) > 0; });
    bool negative = std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) < 0; });
    if (positive || negative) return std::nullopt;
  }
  return best;
}

}  // namespace

std::optional<int> certify_c_sigma_finite(const AlgebraSpec& spec, const ScalingAutomorphism& sigma) {
  const std::size_t n = spec.n();
  if (n > 10) return std::nullopt;
  std::vector<QCoefficient> family;
  for (std::size_t i = 0; i < n; ++i) {
    family.push_back(sigma.p(i));
    for (std::size_t k = 0; k < n; ++k) family.push_back(spec.q(k, i));
  }
  LogBasis logs(family);
  const std::size_t dim = logs.dimension();

  long max_degree = 0;  // γ = 0
  for (unsigned support = 1; support < (1U << n); ++support) {
    auto vars = bits_of(support, n);
    // Rows: for each i in S and each log coordinate,
    //   Σ_{k∈S} γ_k log(q_ki) = log(p_i), with γ = 1 + δ.
    DenseMatrix m;
    Vector rhs;
    for (auto i : vars) {
      auto target = logs.log(sigma.p(i));
      std::vector<Vector> columns;
      for (auto k : vars) columns.push_back(logs.log(spec.q(k, i)));
      for (std::size_t t = 0; t < dim; ++t) {
        Vector row(vars.size());
        Rational r = target[t];
        for (std::size_t c = 0; c < vars.size(); ++c) {
          row[c] = columns[c][t];
          r -= row[c];
        }
        if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return sgn(x) == 0; }) && sgn(r) == 0) {
          continue;
        }
        m.push_back(std::move(row));
        rhs.push_back(r);
      }
    }
    auto extent = polyhedron_max_sum(m, rhs, vars.size());
    if (!extent) return std::nullopt;
    if (*extent < 0) continue;
    max_degree = std::max(max_degree, static_cast<long>(vars.size()) + *extent);
  }
  return static_cast<int>(max_degree);
}

CSigmaSet one_parameter_c_sigma(std::size_t n, int bound) {
  if (n == 0) throw std::invalid_argument("an algebra needs at least one generator");
  if (bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  CSigmaSet set;
  set.bound = bound;
  set.complete = true;
  set.members.push_back(MultiIndex(n));
  long certified = 0;

  for (unsigned support = 1; support < (1U << n); ++support) {
    auto vars = bits_of(support, n);
    const std::size_t s = vars.size();
    DenseMatrix a(s, Vector(s, Rational(0)));
    Vector rhs(s);
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < s; ++c) {
        if (vars[c] > vars[r]) a[r][c] = 1;
        if (vars[c] < vars[r]) a[r][c] = -1;
      }
      rhs[r] = Rational(static_cast<long>(n) - 2 * static_cast<long>(vars[r]) - 1);
    }
    auto solution = linalg::solve(a, rhs, s);
    if (!solution) continue;

    auto accept = [&](const Vector& values) {
      MultiIndex gamma(n);
      int total = 0;
      for (std::size_t c = 0; c < s; ++c) {
        if (values[c].get_den() != 1 || values[c] < 1) return;
        gamma.set(vars[c], static_cast<int>(values[c].get_num().get_si()));
        total += gamma[vars[c]];
      }
      if (total <= bound) set.members.push_back(gamma);
    };

    const auto& p = solution->particular;
    if (solution->kernel.empty()) {
      accept(p);
      Rational sum = std::accumulate(p.begin(), p.end(), Rational(0));
      if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x >= 1 && x.get_den() == 1; })) {
        certified = std::max(certified, sum.get_num().get_si());
      }
      continue;
    }

    if (solution->kernel.size() == 1) {
      // Line p + t v; scale v to integers.
      Vector v = solution->kernel.front();
      mpz_class lcm_den = 1;
      for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
      for (auto& x : v) x *= lcm_den;

      std::size_t key = 0;
      while (sgn(v[key]) == 0) ++key;
      for (int value = 1; value <= bound; ++value) {
        Rational t = (Rational(value) - p[key]) / v[key];
        Vector point(s);
        for (std::size_t c = 0; c < s; ++c) point[c] = p[c] + t * v[c];
        accept(point);
      }

      // The constraints γ ≥ 1 bound t on both sides iff v has both signs.
      bool has_pos = std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) > 0; });
      bool has_neg = std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) < 0; });
      if (!(has_pos && has_neg)) {
        set.complete = false;
        continue;
      }
      std::optional<Rational> lo;
      std::optional<Rational> hi;
      bool empty = false;
      for (std::size_t c = 0; c < s; ++c) {
        if (sgn(v[c]) == 0) {
          if (p[c] < 1) empty = true;
          continue;
        }
        Rational edge = (Rational(1) - p[c]) / v[c];
        if (sgn(v[c]) > 0) {
          if (!lo || edge > *lo) lo = edge;
        } else {
          if (!hi || edge < *hi) hi = edge;
        }
      }
      if (empty || *lo > *hi) continue;
      Rational base = std::accumulate(p.begin(), p.end(), Rational(0));
      Rational slope = std::accumulate(v.begin(), v.end(), Rational(0));
      Rational top = std::max(Rational(base + *lo * slope), Rational(base + *hi * slope));
      mpz_class floor_top;
      mpz_fdiv_q(floor_top.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
      certified = std::max(certified, floor_top.get_si());
      continue;
    }

    // Higher-dimensional solution sets: scan the box directly.
    set.complete = false;
    for (int total = static_cast<int>(s); total <= bound; ++total) {
      for (const auto& rest : multi_indices_of_degree(s, total - static_cast<int>(s))) {
        Vector point(s);
        for (std::size_t c = 0; c < s; ++c) point[c] = Rational(rest[c] + 1);
        bool ok = true;
        for (std::size_t r = 0; r < s && ok; ++r) {
          Rational lhs = 0;
          for (std::size_t c = 0; c < s; ++c) lhs += a[r][c] * point[c];
          ok = lhs == rhs[r];
        }
        if (ok) accept(point);
      }
    }
  }

  if (set.complete) {
    set.certified_max_degree = static_cast<int>(certified);
    set.complete = certified <= bound;
  }
  std::sort(set.members.begin(), set.members.end(), degree_then_lex_less);
  set.members.erase(std::unique(set.members.begin(), set.members.end()), set.members.end());
  return set;
}

HomologyGroup homology_basis(const CSigmaSet& c_sigma, std::size_t n_generators, int n) {
  HomologyGroup group;
  group.n = n;
  if (n < 0 || static_cast<std::size_t>(n) > n_generators) return group;
  auto members = c_sigma.members;
  std::sort(members.begin(), members.end(), degree_then_lex_less);
  for (const auto& gamma : members) {
    auto layer = koszul_basis(gamma, n);
    if (layer.empty()) continue;
    group.grading[gamma] = layer.size();
    group.generators.insert(group.generators.end(), layer.begin(), layer.end());
  }
  return group;
}

HomologyGroup homology_basis(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n, int bound) {
  return homology_basis(enumerate_c_sigma(spec, sigma, bound), spec.n(), n);
}

HomologyReport homology_report(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int bound, int n_max) {
  HomologyReport report;
  report.bound = bound;
  report.c_sigma = enumerate_c_sigma(spec, sigma, bound);
  report.truncated = !report.c_sigma.complete;
  for (int n = 0; n <= n_max; ++n) report.groups.push_back(homology_basis(report.c_sigma, spec.n(), n));
  return report;
}

std::size_t natural_koszul_count(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n,
                                 const MultiIndex& gamma) {
  if (!in_c_sigma(spec, gamma, sigma)) return 0;
  return koszul_basis(gamma, n).size();
}

std::size_t invariant_koszul_count(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n,
                                   const MultiIndex& gamma) {
  if (!apply_sigma(sigma, gamma).is_one()) return 0;
  return natural_koszul_count(spec, sigma, n, gamma);
}

EigenSplit eigen_split(const AlgebraSpec& spec, const std::vector<QCoefficient>& eigenvalues) {
  EigenSplit split;
  split.dimension = eigenvalues.size();
  for (const auto& lambda : eigenvalues) {
    ++split.multiplicities[lambda];
    if (lambda.is_one()) ++split.invariant_dimension;
  }
  if (spec.is_numeric()) {
    linalg::SparseExactMatrix one_minus_sigma(eigenvalues.size(), eigenvalues.size());
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
      one_minus_sigma.add(k, k, Rational(Rational(1) - NumericField::embed(eigenvalues[k])));
    }
    split.image_dimension = linalg::rank(one_minus_sigma);
  } else {
    for (const auto& lambda : eigenvalues) {
      auto diagonal = SymbolicField::embed(QCoefficient::one()) - SymbolicField::embed(lambda);
      if (!SymbolicField::is_zero(diagonal)) ++split.image_dimension;
    }
  }
  return split;
}

EigenSplit quotient_equals_invariant_witness(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int n,
                                             const MultiIndex& gamma) {
  std::vector<QCoefficient> eigenvalues;
  for (const auto& e : koszul_basis(gamma, n)) eigenvalues.push_back(apply_sigma(sigma, e.multidegree()));
  return eigen_split(spec, eigenvalues);
}

}  // namespace qhh
