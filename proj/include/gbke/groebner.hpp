#pragma once

#include "gbke/order.hpp"
#include "gbke/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace gbke {

/// Guards against runaway Buchberger runs. Exceeding either raises
/// ResourceError rather than hanging.
struct GroebnerLimits {
  std::uint64_t max_degree = 64;
  std::size_t max_basis_size = 10000;
};

/// Remainder of f on division by G under `order`.
///
/// Deterministic: the leading term is reduced first and divisors are tried in
/// list order. No term of the result is divisible by a leading monomial of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order);

/// S(f, g) = (L/lt(f)) f - (L/lt(g)) g with L the lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

/// Reduced Groebner basis of <F> under `order`: monic, inter-reduced, sorted
/// by descending leading monomial. Pairs are processed by the normal strategy
/// (smallest lcm first) and pairs with coprime leading monomials are skipped.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F,
                                   const MonomialOrder& order,
                                   const GroebnerLimits& limits = {});

/// Turns any Groebner basis into the reduced one (minimalize, inter-reduce,
/// make monic, sort).
std::vector<Polynomial> reduce_groebner_basis(std::vector<Polynomial> G,
                                              const MonomialOrder& order);

/// Buchberger criterion: every S-polynomial of G reduces to zero modulo G.
bool is_groebner_basis(const std::vector<Polynomial>& G,
                       const MonomialOrder& order,
                       const GroebnerLimits& limits = {});

/// Leading monomials of G under `order`, in list order.
std::vector<Exponent> leading_monomials(const std::vector<Polynomial>& G,
                                        const MonomialOrder& order);

}  // namespace gbke
