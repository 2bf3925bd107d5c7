// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include "app.hpp"

#include "qhh/homology.hpp"
#include "qhh/koszul.hpp"
#include "qhh/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace qhh;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << what;
    passed = passed && ok;
  }
};

using E = KoszulBasisElement;

std::set<E> generator_set(const HomologyGroup& g) { return {g.generators.begin(), g.generators.end()}; }

MultiIndex ones(std::size_t n) { return MultiIndex(std::vector<int>(n, 1)); }

QCoefficient q_power(int k) {
  if (k == 0) return QCoefficient::one();
  return QCoefficient(Rational(1), QExponent::symbol(0, k));
}

// 1. Betti numbers and generators of the quantum plane.
void quantum_plane(Outcome& o) {
  auto plane = AlgebraSpec::quantum_plane_symbolic();
  auto sigma = canonical_automorphism(plane);
  const std::set<E> h0{{MultiIndex{0, 0}, ExteriorIndex{0, 0}}, {MultiIndex{1, 1}, ExteriorIndex{0, 0}}};
  const std::set<E> h1{{MultiIndex{1, 0}, ExteriorIndex{0, 1}}, {MultiIndex{0, 1}, ExteriorIndex{1, 0}}};
  const std::set<E> h2{{MultiIndex{0, 0}, ExteriorIndex{1, 1}}};
  for (int bound = 2; bound <= 10; ++bound) {
    auto r = homology_report(plane, sigma, bound, 5);
    const std::string at = " at bound " + std::to_string(bound);
    o.require(!r.truncated, "truncated" + at);
    o.require(r.betti(0) == 2 && r.betti(1) == 2 && r.betti(2) == 1, "betti(0..2) != (2,2,1)" + at);
    for (int n = 3; n <= 5; ++n) o.require(r.betti(n) == 0, "betti(n>=3) nonzero" + at);
    o.require(generator_set(r.groups[0]) == h0, "HH_0 generators differ" + at);
    o.require(generator_set(r.groups[1]) == h1, "HH_1 generators differ" + at);
    o.require(generator_set(r.groups[2]) == h2, "HH_2 generators differ" + at);
  }
  o.detail << "bounds 2..10, betti (2,2,1,0,0,0)";
}

// 2. Canonical automorphism formulas.
void canonical_formulas(Outcome& o) {
  auto plane = canonical_automorphism(AlgebraSpec::quantum_plane_symbolic());
  o.require(plane.values() == std::vector<QCoefficient>{q_power(-1), q_power(1)}, "plane p != (q^-1, q); ");
  for (int n = 2; n <= 6; ++n) {
    auto sigma = canonical_automorphism(AlgebraSpec::one_parameter_symbolic(static_cast<std::size_t>(n)));
    std::vector<QCoefficient> expected;
    for (int i = 1; i <= n; ++i) expected.push_back(q_power(n - 2 * i + 1));
    o.require(sigma.values() == expected, "p_i != q^(N-2i+1) at N=" + std::to_string(n) + "; ");
  }
  if (o.passed) o.detail << "plane (q^-1, q); p_i = q^(N-2i+1) for N = 2..6";
}

// 3. Top class of the one-parameter algebra.
void top_class(Outcome& o) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto spec = AlgebraSpec::one_parameter_symbolic(n);
    auto r = homology_report(spec, canonical_automorphism(spec), static_cast<int>(2 * n), static_cast<int>(n));
    const auto& top = r.groups[n].generators;
    o.require(top == std::vector<E>{{MultiIndex(n), ExteriorIndex(std::vector<int>(n, 1))}},
              "top generator wrong at N=" + std::to_string(n) + "; ");
    o.require(generator_set(r.groups[n]).begin()->multidegree() == ones(n), "top multidegree wrong; ");
  }
  if (o.passed) o.detail << "betti(N) = 1, generator 1 ⊗ x1∧…∧xN for N = 2, 3, 4";
}

// 4. Untwisted homology of distinct-prime parameters.
void dimension_drop(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto spec = AlgebraSpec::prime_multiparameter(n);
    auto id = ScalingAutomorphism::identity(n);
    for (int bound = 0; bound <= 6; ++bound) {
      auto r = homology_report(spec, id, bound, static_cast<int>(n) + 2);
      for (int k = 2; k <= static_cast<int>(n) + 2; ++k) {
        o.require(r.betti(k) == 0, "betti(" + std::to_string(k) + ") nonzero at N=" + std::to_string(n) +
                                       " bound " + std::to_string(bound) + "; ");
      }
    }
  }
  if (o.passed) o.detail << "N = 2, 3, bounds 0..6, betti(n>=2) = 0";
}

struct OracleCase {
  std::string name;
  AlgebraSpec spec;
  ScalingAutomorphism sigma;
};

std::vector<OracleCase> oracle_cases() {
  std::vector<OracleCase> out;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (auto [label, spec] : {std::pair{std::string("primes"), AlgebraSpec::prime_multiparameter(n)},
                               std::pair{std::string("symbolic"), AlgebraSpec::generic_symbolic(n)}}) {
      const std::string base = "N=" + std::to_string(n) + " " + label;
      out.push_back({base + " canonical", spec, canonical_automorphism(spec)});
      out.push_back({base + " identity", spec, ScalingAutomorphism::identity(n)});
    }
  }
  auto plane = AlgebraSpec::quantum_plane_symbolic();
  out.push_back({"plane canonical", plane, canonical_automorphism(plane)});
  out.push_back({"plane identity", plane, ScalingAutomorphism::identity(2)});
  return out;
}

// 5. Oracle against Koszul counts, cell by cell, nothing skipped.
void oracle_equivalence(Outcome& o, std::vector<ComparisonReport>& reports) {
  std::size_t cells = 0;
  for (const auto& c : oracle_cases()) {
    auto r = compare_with_koszul(c.spec, c.sigma, 3, 4);
    o.require(r.skipped == 0, c.name + ": skipped cells; ");
    for (const auto& cell : r.cells) {
      o.require(cell.natural_oracle == cell.natural_koszul && cell.invariant_oracle == cell.invariant_koszul,
                c.name + ": mismatch at n=" + std::to_string(cell.n) + "; ");
    }
    cells += r.cells.size();
    reports.push_back(std::move(r));
  }
  if (o.passed) o.detail << cells << " cells, |γ| <= 4, n <= 3";
}

std::vector<std::pair<std::string, AlgebraSpec>> koszul_specs() {
  return {{"plane", AlgebraSpec::quantum_plane_symbolic()},
          {"N=2 symbolic", AlgebraSpec::generic_symbolic(2)},
          {"N=3 symbolic", AlgebraSpec::generic_symbolic(3)},
          {"N=3 one-parameter", AlgebraSpec::one_parameter_symbolic(3)}};
}

// 6. Homotopy identity, exhaustive to |α+β| = 5.
void homotopy_identity(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& [name, spec] : koszul_specs()) {
    auto r = SymbolicKoszul(spec, canonical_automorphism(spec)).check_homotopy_identity(5);
    o.require(r.passed, name + ": homotopy identity fails; ");
    o.require(r.elements_checked == koszul_basis_up_to(spec.n(), 5).size(), name + ": not exhaustive; ");
    checked += r.elements_checked;
  }
  if (o.passed) o.detail << checked << " basis elements";
}

// 7. d² = 0 on the Koszul side, b² = 0 on the Hochschild side.
void squares_vanish(Outcome& o) {
  std::size_t koszul_checked = 0;
  std::size_t cells = 0;
  for (const auto& [name, spec] : koszul_specs()) {
    for (const auto& sigma : {canonical_automorphism(spec), ScalingAutomorphism::identity(spec.n())}) {
      auto d2 = SymbolicKoszul(spec, sigma).check_d_squared(5);
      o.require(d2.passed, name + ": d^2 != 0; ");
      o.require(d2.elements_checked == koszul_basis_up_to(spec.n(), 5).size(), name + ": d^2 not exhaustive; ");
      koszul_checked += d2.elements_checked;

      HochschildOracle oracle(spec, sigma);
      const int n_max = 5;
      // No cell may be skipped by the size cap.
      for (const auto& gamma : multi_indices_up_to(spec.n(), 5)) {
        for (int n = 0; n <= n_max + 1; ++n) o.require(oracle.basis(n, gamma).has_value(), name + ": capped cell; ");
      }
      auto b2 = check_b_squared(spec, sigma, n_max, 5);
      o.require(b2.passed, name + ": b^2 != 0; ");
      cells += b2.cells_checked;
    }
  }
  if (o.passed) o.detail << koszul_checked << " Koszul elements, " << cells << " Hochschild cells, |γ| <= 5";
}

TensorChain random_chain(std::mt19937_64& rng, const std::vector<TensorBasisElement>& basis, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 5);
  TensorChain c;
  for (int k = 0; k < terms; ++k) {
    int a = 0;
    while (a == 0) a = num(rng);
    Rational r(a, den(rng));
    r.canonicalize();
    add_term(c, basis[pick(rng)], r);
  }
  return c;
}

// 8. Invariant equals quotient, and the eigencomponent property of b.
void invariant_quotient(Outcome& o, const std::vector<ComparisonReport>& reports) {
  std::size_t cells = 0;
  for (const auto& r : reports) {
    for (const auto& cell : r.cells) {
      o.require(cell.invariant_oracle == cell.quotient_oracle, "invariant != quotient in a cell; ");
      ++cells;
    }
  }
  std::mt19937_64 rng(77);
  std::size_t premises = 0;
  for (std::size_t n_vars = 2; n_vars <= 3; ++n_vars) {
    auto spec = AlgebraSpec::prime_multiparameter(n_vars);
    HochschildOracle oracle(spec, canonical_automorphism(spec));
    const int degree_bound = n_vars == 2 ? 4 : 3;
    for (int n = 1; n <= 3; ++n) {
      std::vector<TensorBasisElement> all, unit;
      std::vector<TensorChain> cycles;
      for (const auto& gamma : multi_indices_up_to(n_vars, degree_bound)) {
        auto local = *oracle.basis(n, gamma);
        if (local.empty()) continue;
        all.insert(all.end(), local.begin(), local.end());
        for (const auto& v : linalg::kernel_basis(oracle.twisted_boundary(n, gamma))) {
          TensorChain z;
          for (std::size_t m = 0; m < local.size(); ++m) add_term(z, local[m], v[m]);
          cycles.push_back(std::move(z));
        }
      }
      for (const auto& e : all) {
        if (oracle.eigenvalue(e) == 1) unit.push_back(e);
      }
      if (cycles.empty() || unit.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick_cycle(0, cycles.size() - 1);
      for (int trial = 0; trial < 400; ++trial) {
        TensorChain k = random_chain(rng, trial % 4 ? unit : all, static_cast<int>(rng() % 4));
        for (int j = 0; j < 1 + static_cast<int>(rng() % 3); ++j) {
          Rational w(static_cast<long>(rng() % 7) + 1);
          for (const auto& [e, c] : cycles[pick_cycle(rng)]) add_term(k, e, w * c);
        }
        auto bk = oracle.boundary(k);
        bool invariant =
            std::all_of(bk.begin(), bk.end(), [&](const auto& t) { return oracle.eigenvalue(t.first) == 1; });
        if (!invariant) continue;
        ++premises;
        for (const auto& [lambda, part] : oracle.eigen_decompose(k)) {
          if (lambda != 1) o.require(oracle.boundary(part).empty(), "non-unit eigencomponent not a cycle; ");
        }
      }
    }
  }
  o.require(premises >= 1000, "fewer than 1000 chains with invariant boundary; ");
  if (o.passed) o.detail << cells << " cells agree; property held on " << premises << " random chains";
}

// 9. One-parameter solver against brute force.
void one_parameter_solver(Outcome& o) {
  std::size_t runs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto spec = AlgebraSpec::one_parameter_symbolic(n);
    auto sigma = canonical_automorphism(spec);
    for (int bound = 0; bound <= 8; ++bound) {
      o.require(one_parameter_c_sigma(n, bound).members == enumerate_c_sigma(spec, sigma, bound).members,
                "N=" + std::to_string(n) + " bound " + std::to_string(bound) + " differs; ");
      ++runs;
    }
  }
  if (o.passed) o.detail << runs << " (N, bound) pairs, N <= 4, bound <= 8";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 10. Byte-identical homology reports.
void determinism(Outcome& o) {
  auto dir = std::filesystem::temp_directory_path() / "qhh_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> configs = {
      {"--n", "2", "--q", "1,2,q", "homology", "--bound", "6"},
      {"--n", "3", "--symbolic", "homology"},
      {"--n", "4", "--one-parameter", "q", "homology", "--bound", "6", "--allow-truncated"},
      {"--n", "3", "--auto-primes", "--automorphism", "identity", "homology", "--allow-truncated"},
  };
  for (const auto& args : configs) {
    std::string first;
    for (int run_index = 0; run_index < 2; ++run_index) {
      auto path = dir / ("run" + std::to_string(run_index) + ".json");
      auto full = args;
      full.insert(full.end(), {"--out", path.string()});
      std::ostringstream out, err;
      o.require(app::run(full, out, err) == app::exit_ok, "homology run failed; ");
      auto bytes = slurp(path);
      o.require(!bytes.empty(), "empty report; ");
      if (run_index == 0) {
        first = bytes;
      } else {
        o.require(bytes == first, "reports differ; ");
      }
    }
  }
  if (o.passed) o.detail << configs.size() << " configurations, two runs each";
}

}  // namespace

int main() {
  std::vector<ComparisonReport> reports;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"quantum plane Betti numbers and generators", quantum_plane},
      {"canonical automorphism formulas", canonical_formulas},
      {"one-parameter top class", top_class},
      {"untwisted dimension drop", dimension_drop},
      {"oracle equals Koszul counts", [&](Outcome& o) { oracle_equivalence(o, reports); }},
      {"homotopy identity", homotopy_identity},
      {"d^2 = 0 and b^2 = 0", squares_vanish},
      {"invariant equals quotient; eigencomponent cycles", [&](Outcome& o) { invariant_quotient(o, reports); }},
      {"one-parameter C_sigma solver", one_parameter_solver},
      {"deterministic reports", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << ": "
              << o.detail.str() << " (" << std::fixed << std::setprecision(2) << seconds << "s)\n";
    failures += o.passed ? 0 : 1;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures) << "/"
            << criteria.size() << "\n";
  return failures ? 1 : 0;
}
