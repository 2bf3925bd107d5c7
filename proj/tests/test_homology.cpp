#include "qhh/homology.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace qhh;
using namespace qhh::testing;

namespace {

std::set<MultiIndex> reference_c_sigma(const AlgebraSpec& spec, const ScalingAutomorphism& sigma, int bound) {
  std::set<MultiIndex> out;
  for (const auto& gamma : multi_indices_up_to(spec.n(), bound)) {
    if (reference_in_c_sigma(spec, gamma, sigma)) out.insert(gamma);
  }
  return out;
}

std::set<MultiIndex> as_set(const CSigmaSet& s) { return {s.members.begin(), s.members.end()}; }

}  // namespace

TEST_CASE("quantum plane homology") {
  auto plane = AlgebraSpec::quantum_plane_symbolic();
  auto sigma = canonical_automorphism(plane);
  for (int bound : {2, 4, 6, 9}) {
    auto report = homology_report(plane, sigma, bound, 4);
    CHECK_FALSE(report.truncated);
    CHECK(report.c_sigma.complete);
    CHECK(report.betti(0) == 2);
    CHECK(report.betti(1) == 2);
    CHECK(report.betti(2) == 1);
    CHECK(report.betti(3) == 0);
    CHECK(report.betti(4) == 0);
    using E = KoszulBasisElement;
    CHECK(report.groups[0].generators ==
          std::vector<E>{{MultiIndex{0, 0}, ExteriorIndex{0, 0}}, {MultiIndex{1, 1}, ExteriorIndex{0, 0}}});
    auto h1 = report.groups[1].generators;
    CHECK(std::set<E>(h1.begin(), h1.end()) ==
          std::set<E>{{MultiIndex{1, 0}, ExteriorIndex{0, 1}}, {MultiIndex{0, 1}, ExteriorIndex{1, 0}}});
    CHECK(report.groups[2].generators == std::vector<E>{{MultiIndex{0, 0}, ExteriorIndex{1, 1}}});
  }
  // Bound 1 cannot reach xy and is flagged.
  auto low = homology_report(plane, sigma, 1, 2);
  CHECK(low.truncated);
  CHECK(low.betti(0) == 1);
}

TEST_CASE("C_sigma on the quantum plane") {
  auto plane = AlgebraSpec::quantum_plane_symbolic();
  auto sigma = canonical_automorphism(plane);
  auto cs = enumerate_c_sigma(plane, sigma, 4);
  CHECK(cs.members == std::vector<MultiIndex>{MultiIndex{0, 0}, MultiIndex{1, 1}});
  CHECK(cs.complete);
  CHECK(*cs.certified_max_degree == 2);
  CHECK(cs.contains(MultiIndex{1, 1}));
  CHECK_FALSE(cs.contains(MultiIndex{1, 0}));
  CHECK_THROWS_AS(enumerate_c_sigma(plane, sigma, -1), std::invalid_argument);
}

TEST_CASE("identity automorphism keeps pure powers only") {
  for (std::size_t n : {2U, 3U}) {
    auto spec = AlgebraSpec::prime_multiparameter(n);
    auto id = ScalingAutomorphism::identity(n);
    for (int bound = 0; bound <= 6; ++bound) {
      auto cs = enumerate_c_sigma(spec, id, bound);
      for (const auto& gamma : cs.members) CHECK(gamma.support_size() <= 1);
      CHECK(cs.members.size() == 1 + n * static_cast<std::size_t>(bound));
      CHECK_FALSE(cs.complete);
      auto report = homology_report(spec, id, bound, 3);
      for (int k = 2; k <= 3; ++k) CHECK(report.betti(k) == 0);
      CHECK(report.betti(0) == 1 + n * static_cast<std::size_t>(bound));
      CHECK(report.betti(1) == n * static_cast<std::size_t>(bound));
    }
    CHECK_FALSE(certify_c_sigma_finite(spec, id));
  }
}

TEST_CASE("enumeration matches first principles") {
  std::vector<std::pair<AlgebraSpec, ScalingAutomorphism>> cases;
  for (auto spec : {AlgebraSpec::generic_symbolic(3), AlgebraSpec::one_parameter_symbolic(3),
                    AlgebraSpec::numeric(3, {{{0, 1}, 2}, {{0, 2}, Rational(1, 2)}, {{1, 2}, 2}})}) {
    cases.emplace_back(spec, canonical_automorphism(spec));
    cases.emplace_back(spec, ScalingAutomorphism::identity(3));
    cases.emplace_back(spec, solve_automorphism_for_top(spec, MultiIndex{1, 0, 2}));
  }
  for (const auto& [spec, sigma] : cases) CHECK(as_set(enumerate_c_sigma(spec, sigma, 6)) == reference_c_sigma(spec, sigma, 6));
}

TEST_CASE("finiteness certificate is sound") {
  std::vector<std::pair<AlgebraSpec, ScalingAutomorphism>> cases;
  for (std::size_t n = 2; n <= 4; ++n) {
    auto g = AlgebraSpec::generic_symbolic(n);
    cases.emplace_back(g, canonical_automorphism(g));
    auto alpha = random_multi_index(n, 2);
    cases.emplace_back(g, solve_automorphism_for_top(g, alpha));
  }
  // q_13 = q_12 q_23 is a multiplicative relation, yet every p_i ≠ 1.
  auto nongeneric = AlgebraSpec::numeric(3, {{{0, 1}, 2}, {{0, 2}, 3}, {{1, 2}, 6}});
  cases.emplace_back(nongeneric, canonical_automorphism(nongeneric));
  for (const auto& [spec, sigma] : cases) {
    auto cert = certify_c_sigma_finite(spec, sigma);
    REQUIRE(cert);
    // No member of degree above the certificate, checked well beyond it.
    int scan = std::min(*cert + 4, spec.n() == 4 ? 9 : 12);
    for (const auto& gamma : enumerate_c_sigma(spec, sigma, scan).members) CHECK(gamma.total() <= *cert);
  }
  // p_1 = q_21 q_31 = 1 puts every x_1^m in C_σ, so no certificate exists.
  auto line = AlgebraSpec::numeric(3, {{{0, 1}, 2}, {{0, 2}, Rational(1, 2)}, {{1, 2}, 3}});
  CHECK_FALSE(certify_c_sigma_finite(line, canonical_automorphism(line)));
  for (int m = 1; m <= 10; ++m) CHECK(reference_in_c_sigma(line, MultiIndex{m, 0, 0}, canonical_automorphism(line)));
  // Generic canonical C_σ is exactly {0, (1,…,1)}.
  auto g3 = AlgebraSpec::generic_symbolic(3);
  auto cs = enumerate_c_sigma(g3, canonical_automorphism(g3), 6);
  CHECK(cs.members == std::vector<MultiIndex>{MultiIndex{0, 0, 0}, MultiIndex{1, 1, 1}});
  CHECK(cs.complete);
}

TEST_CASE("one-parameter solver agrees with enumeration") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto spec = AlgebraSpec::one_parameter_symbolic(n);
    auto sigma = canonical_automorphism(spec);
    for (int bound = 0; bound <= 8; ++bound) {
      auto solved = one_parameter_c_sigma(n, bound);
      auto brute = enumerate_c_sigma(spec, sigma, bound);
      CHECK(solved.members == brute.members);
      // Whenever the solver claims completeness, the brute force sees nothing more.
      if (solved.complete) {
        for (const auto& g : enumerate_c_sigma(spec, sigma, bound + 4).members) CHECK(g.total() <= bound);
      }
    }
  }
  auto three = one_parameter_c_sigma(3, 6);
  CHECK(three.contains(MultiIndex{1, 1, 1}));
  CHECK(three.contains(MultiIndex{2, 0, 2}));
  CHECK(three.contains(MultiIndex{0, 6, 0}));
  CHECK_FALSE(three.complete);
  auto two = one_parameter_c_sigma(2, 5);
  CHECK(two.members == std::vector<MultiIndex>{MultiIndex{0, 0}, MultiIndex{1, 1}});
  CHECK(two.complete);
  CHECK_THROWS_AS(one_parameter_c_sigma(0, 2), std::invalid_argument);
}

TEST_CASE("one-parameter top degree is the single class at (1,...,1)") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto spec = AlgebraSpec::one_parameter_symbolic(n);
    auto report = homology_report(spec, canonical_automorphism(spec), n == 5 ? 7 : 8, static_cast<int>(n));
    const auto& top = report.groups[n].generators;
    REQUIRE(top.size() == 1);
    CHECK(top.front().alpha == MultiIndex(n));
    CHECK(top.front().beta == ExteriorIndex(std::vector<int>(n, 1)));
  }
}

TEST_CASE("Koszul counts per cell") {
  auto plane = AlgebraSpec::quantum_plane_symbolic();
  auto sigma = canonical_automorphism(plane);
  CHECK(natural_koszul_count(plane, sigma, 1, MultiIndex{1, 1}) == 2);
  CHECK(natural_koszul_count(plane, sigma, 1, MultiIndex{1, 0}) == 0);
  CHECK(invariant_koszul_count(plane, sigma, 2, MultiIndex{1, 1}) == 1);
  auto spec = AlgebraSpec::prime_multiparameter(2);
  auto explicit_sigma = ScalingAutomorphism({QCoefficient(Rational(1, 2)), QCoefficient(1)});
  // γ = (0,1) is in C_σ (σ fixes y and y commutes with itself) and σ(y) = y.
  CHECK(natural_koszul_count(spec, explicit_sigma, 0, MultiIndex{0, 1}) == 1);
  CHECK(invariant_koszul_count(spec, explicit_sigma, 0, MultiIndex{0, 1}) == 1);
}

TEST_CASE("eigen split of the Koszul chain spaces") {
  auto spec = AlgebraSpec::generic_symbolic(3);
  auto sigma = canonical_automorphism(spec);
  for (const auto& gamma : multi_indices_up_to(3, 4)) {
    for (int n = 0; n <= 3; ++n) {
      auto split = quotient_equals_invariant_witness(spec, sigma, n, gamma);
      CHECK(split.is_direct_sum());
      CHECK(split.dimension == koszul_basis(gamma, n).size());
    }
  }
  auto numeric = AlgebraSpec::prime_multiparameter(2);
  auto split = eigen_split(numeric, {QCoefficient(1), QCoefficient(2), QCoefficient(2), QCoefficient(-1)});
  CHECK(split.invariant_dimension == 1);
  CHECK(split.image_dimension == 3);
  CHECK(split.multiplicities.at(QCoefficient(2)) == 2);
}

TEST_CASE("every generator lies over C_sigma") {
  for (auto spec : {AlgebraSpec::generic_symbolic(3), AlgebraSpec::one_parameter_symbolic(4)}) {
    auto sigma = canonical_automorphism(spec);
    auto report = homology_report(spec, sigma, 6, static_cast<int>(spec.n()));
    for (const auto& g : report.groups) {
      std::size_t graded = 0;
      for (const auto& [gamma, count] : g.grading) graded += count;
      CHECK(graded == g.betti());
      for (const auto& e : g.generators) {
        CHECK(e.degree() == g.n);
        CHECK(reference_in_c_sigma(spec, e.multidegree(), sigma));
      }
    }
  }
}
