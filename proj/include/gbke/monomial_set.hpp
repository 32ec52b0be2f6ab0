#pragma once

#include "gbke/ring.hpp"

#include <vector>

namespace gbke {

/// A list of monomials. When `minimal` is set no element divides another and
/// the list is in canonical descending lex order (x_1 > ... > x_n).
struct MonomialSet {
  std::vector<Exponent> monomials;
  bool minimal = false;

  bool operator==(const MonomialSet& o) const {
    return monomials == o.monomials && minimal == o.minimal;
  }
};

/// Unique minimal generating set of the monomial ideal <M>, canonically
/// ordered. Throws DomainError on empty input.
MonomialSet min_mono_gens(const std::vector<Exponent>& M);
inline MonomialSet min_mono_gens(const MonomialSet& M) { return min_mono_gens(M.monomials); }

/// Membership in M_k: M is minimal and every exponent entry is < k.
bool in_Mk(const MonomialSet& M, std::uint32_t k);

}  // namespace gbke
