#include "gbke/monomial_set.hpp"

#include "gbke/errors.hpp"
#include "gbke/polynomial.hpp"

#include <algorithm>

namespace gbke {

MonomialSet min_mono_gens(const std::vector<Exponent>& M) {
  if (M.empty()) throw DomainError("min_mono_gens of an empty set");
  std::vector<Exponent> sorted = M;
  // Ascending total degree: a divisor always precedes its multiples.
  std::sort(sorted.begin(), sorted.end(), [](const Exponent& a, const Exponent& b) {
    const auto da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : canonical_greater(a, b);
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  MonomialSet out;
  for (auto& m : sorted) {
    const bool redundant = std::any_of(out.monomials.begin(), out.monomials.end(),
                                       [&](const Exponent& g) { return divides(g, m); });
    if (!redundant) out.monomials.push_back(std::move(m));
  }
  std::sort(out.monomials.begin(), out.monomials.end(), canonical_greater);
  out.minimal = true;
  return out;
}

bool in_Mk(const MonomialSet& M, std::uint32_t k) {
  if (M.monomials.empty()) return false;
  for (const auto& m : M.monomials)
    for (auto e : m)
      if (e >= k) return false;
  const MonomialSet mm = min_mono_gens(M.monomials);
  return mm.monomials.size() == M.monomials.size() &&
         std::is_permutation(mm.monomials.begin(), mm.monomials.end(), M.monomials.begin());
}

}  // namespace gbke
