#include "qhh/koszul.hpp"

namespace qhh {

std::ostream& operator<<(std::ostream& out, const KoszulBasisElement& e) {
  return out << "x^" << e.alpha << " ⊗ x^" << e.beta;
}

std::vector<KoszulBasisElement> koszul_basis(const MultiIndex& gamma, int n) {
  std::vector<KoszulBasisElement> out;
  const std::size_t size = gamma.size();
  if (n < 0 || static_cast<std::size_t>(n) > size) return out;
  // β ranges over n-subsets of the support of γ, in increasing bit order.
  std::vector<int> bits(size, 0);
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == size) {
      if (remaining == 0) {
        ExteriorIndex beta(bits);
        out.push_back({gamma - beta.as_multi_index(), beta});
      }
      return;
    }
    if (static_cast<int>(size - pos) < remaining) return;
    bits[pos] = 0;
    self(self, pos + 1, remaining);
    if (remaining > 0 && gamma[pos] > 0) {
      bits[pos] = 1;
      self(self, pos + 1, remaining - 1);
      bits[pos] = 0;
    }
  };
  recurse(recurse, 0, n);
  return out;
}

std::vector<KoszulBasisElement> koszul_basis_up_to(std::size_t n_generators, int bound) {
  std::vector<KoszulBasisElement> out;
  for (const auto& gamma : multi_indices_up_to(n_generators, bound)) {
    for (int n = 0; n <= static_cast<int>(n_generators); ++n) {
      auto layer = koszul_basis(gamma, n);
      out.insert(out.end(), layer.begin(), layer.end());
    }
  }
  return out;
}

}  // namespace qhh
