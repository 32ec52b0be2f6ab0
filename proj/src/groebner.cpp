#include "gbke/groebner.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gbke {

namespace {

// Terms kept in descending order under the active monomial order; the
// leading term is terms.front().
struct OrderedPoly {
  std::vector<Term> terms;
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms) d = std::max(d, total_degree(t.exp));
    return d;
  }
};

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedPoly o{p.terms()};
  std::sort(o.terms.begin(), o.terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.exp, b.exp);
  });
  return o;
}

Polynomial to_canonical(const Ring& ring, OrderedPoly&& p) {
  return Polynomial(ring, std::move(p.terms));
}

// a[from..] - c * x^shift * b, both sorted descending under `order`.
std::vector<Term> sub_scaled_shifted(const Field& k, const MonomialOrder& order,
                                     const std::vector<Term>& a, std::size_t from,
                                     const FieldElement& c, const Exponent& shift,
                                     const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  Exponent bj;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) bj = b[j].exp + shift;
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({k.neg(k.mul(c, b[j].coeff)), std::move(bj)});
      ++j;
      continue;
    }
    const auto cmp = order.compare(a[i].exp, bj);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({k.neg(k.mul(c, b[j].coeff)), std::move(bj)});
      ++j;
    } else {
      FieldElement v = k.sub_mul(a[i].coeff, c, b[j].coeff);
      if (!k.is_zero(v)) out.push_back({std::move(v), a[i].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of p modulo divisors (each nonzero, ordered).
OrderedPoly reduce_full(const Field& k, const MonomialOrder& order, OrderedPoly p,
                        const std::vector<const OrderedPoly*>& divisors,
                        const GroebnerLimits* limits) {
  OrderedPoly r;
  std::vector<Term> cur = std::move(p.terms);
  std::size_t head = 0;
  while (head < cur.size()) {
    const Term& lt = cur[head];
    const OrderedPoly* hit = nullptr;
    for (const auto* g : divisors) {
      if (divides(g->terms.front().exp, lt.exp)) {
        hit = g;
        break;
      }
    }
    if (!hit) {
      r.terms.push_back(lt);
      ++head;
      continue;
    }
    const Term& glt = hit->terms.front();
    const FieldElement c = k.div(lt.coeff, glt.coeff);
    const Exponent shift = quotient(lt.exp, glt.exp);
    cur = sub_scaled_shifted(k, order, cur, head, c, shift, hit->terms);
    head = 0;
    if (limits) {
      for (const auto& t : cur)
        if (total_degree(t.exp) > limits->max_degree)
          throw ResourceError("Groebner computation exceeded max degree " +
                              std::to_string(limits->max_degree));
    }
  }
  return r;
}

void check_rings(const std::vector<Polynomial>& G, const Ring& ring) {
  for (const auto& g : G)
    if (g.ring() != ring && !(*g.ring() == *ring))
      throw DomainError("polynomials live in different rings");
}

OrderedPoly spoly_ordered(const Field& k, const MonomialOrder& order,
                          const OrderedPoly& f, const OrderedPoly& g) {
  const Term& lf = f.terms.front();
  const Term& lg = g.terms.front();
  const Exponent L = lcm(lf.exp, lg.exp);
  // (L/lt f) f
  OrderedPoly a;
  const FieldElement cf = k.inv(lf.coeff);
  const Exponent sf = quotient(L, lf.exp);
  a.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) a.terms.push_back({k.mul(cf, t.coeff), t.exp + sf});
  const FieldElement cg = k.inv(lg.coeff);
  a.terms = sub_scaled_shifted(k, order, a.terms, 0, cg, quotient(L, lg.exp), g.terms);
  return a;
}

}  // namespace

std::vector<Exponent> leading_monomials(const std::vector<Polynomial>& G,
                                        const MonomialOrder& order) {
  std::vector<Exponent> out;
  out.reserve(G.size());
  for (const auto& g : G) out.push_back(g.leading_monomial(order));
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order) {
  if (G.empty()) throw DomainError("normal_form needs a nonempty divisor list");
  check_rings(G, f.ring());
  if (order.num_vars() != f.ring()->num_vars())
    throw DomainError("monomial order does not match the ring");
  std::vector<OrderedPoly> ordered;
  ordered.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw DomainError("zero polynomial in divisor list");
    ordered.push_back(to_ordered(g, order));
  }
  std::vector<const OrderedPoly*> divisors;
  for (const auto& o : ordered) divisors.push_back(&o);
  return to_canonical(f.ring(), reduce_full(f.ring()->field(), order,
                                            to_ordered(f, order), divisors, nullptr));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of zero");
  check_rings({g}, f.ring());
  const Field& k = f.ring()->field();
  return to_canonical(f.ring(), spoly_ordered(k, order, to_ordered(f, order),
                                              to_ordered(g, order)));
}

std::vector<Polynomial> reduce_groebner_basis(std::vector<Polynomial> G,
                                              const MonomialOrder& order) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& p) { return p.is_zero(); }),
          G.end());
  if (G.empty()) return G;
  const Ring ring = G.front().ring();
  check_rings(G, ring);
  const Field& k = ring->field();

  std::vector<OrderedPoly> ord;
  for (const auto& g : G) ord.push_back(to_ordered(g, order));
  // Minimalize: ascending by leading monomial, keep those not divisible by a
  // kept one.
  std::stable_sort(ord.begin(), ord.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.compare(a.terms.front().exp, b.terms.front().exp) < 0;
  });
  std::vector<OrderedPoly> minimal;
  for (auto& p : ord) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const OrderedPoly& m) {
      return divides(m.terms.front().exp, p.terms.front().exp);
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  // Inter-reduce tails against the other minimal elements.
  std::vector<OrderedPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const OrderedPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    OrderedPoly tail{std::vector<Term>(minimal[i].terms.begin() + 1, minimal[i].terms.end())};
    OrderedPoly r = reduce_full(k, order, std::move(tail), others, nullptr);
    OrderedPoly full;
    full.terms.push_back(minimal[i].terms.front());
    for (auto& t : r.terms) full.terms.push_back(std::move(t));
    const FieldElement inv = k.inv(full.terms.front().coeff);
    for (auto& t : full.terms) t.coeff = k.mul(inv, t.coeff);
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.greater(a.terms.front().exp, b.terms.front().exp);
  });
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& r : reduced) out.push_back(to_canonical(ring, std::move(r)));
  return out;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F,
                                   const MonomialOrder& order,
                                   const GroebnerLimits& limits) {
  if (F.empty()) throw DomainError("buchberger needs at least one generator");
  const Ring ring = F.front().ring();
  check_rings(F, ring);
  if (order.num_vars() != ring->num_vars())
    throw DomainError("monomial order does not match the ring");
  const Field& k = ring->field();

  std::vector<OrderedPoly> basis;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    if (f.degree() > limits.max_degree)
      throw ResourceError("generator exceeds max degree " + std::to_string(limits.max_degree));
    basis.push_back(to_ordered(f, order));
  }
  if (basis.empty()) return {};

  struct Pair {
    std::size_t i, j;
    Exponent lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = basis[i].terms.front().exp;
      const auto& b = basis[j].terms.front().exp;
      if (coprime(a, b)) continue;
      pairs.push_back({i, j, lcm(a, b)});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm, ties by insertion order.
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it)
      if (order.compare(it->lcm, best->lcm) < 0) best = it;
    const Pair p = *best;
    pairs.erase(best);

    OrderedPoly s = spoly_ordered(k, order, basis[p.i], basis[p.j]);
    if (s.degree() > limits.max_degree)
      throw ResourceError("S-polynomial exceeds max degree " + std::to_string(limits.max_degree));
    std::vector<const OrderedPoly*> divisors;
    divisors.reserve(basis.size());
    for (const auto& b : basis) divisors.push_back(&b);
    OrderedPoly r = reduce_full(k, order, std::move(s), divisors, &limits);
    if (r.terms.empty()) continue;
    if (basis.size() + 1 > limits.max_basis_size)
      throw ResourceError("Groebner basis exceeded " + std::to_string(limits.max_basis_size) +
                          " elements");
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (auto& b : basis) out.push_back(to_canonical(ring, std::move(b)));
  return reduce_groebner_basis(std::move(out), order);
}

bool is_groebner_basis(const std::vector<Polynomial>& G, const MonomialOrder& order,
                       const GroebnerLimits& limits) {
  if (G.empty()) throw DomainError("empty basis");
  const Ring ring = G.front().ring();
  check_rings(G, ring);
  const Field& k = ring->field();
  std::vector<OrderedPoly> ord;
  for (const auto& g : G) {
    if (g.is_zero()) throw DomainError("zero polynomial in basis");
    ord.push_back(to_ordered(g, order));
  }
  std::vector<const OrderedPoly*> divisors;
  for (const auto& o : ord) divisors.push_back(&o);
  for (std::size_t j = 1; j < ord.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(ord[i].terms.front().exp, ord[j].terms.front().exp)) continue;
      OrderedPoly s = spoly_ordered(k, order, ord[i], ord[j]);
      if (!reduce_full(k, order, std::move(s), divisors, &limits).terms.empty()) return false;
    }
  }
  return true;
}

}  // namespace gbke
