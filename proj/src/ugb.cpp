#include "gbke/ugb.hpp"

#include "gbke/errors.hpp"
#include "gbke/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace gbke {

UniversalBasis::UniversalBasis(Ring ring, std::vector<Polynomial> elements,
                               std::string provenance)
    : ring_(std::move(ring)), elements_(std::move(elements)), provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& f = elements_[i];
    if (!(*f.ring() == *ring_)) throw DomainError("basis element over a different ring");
    if (f.is_zero()) throw DomainError("zero polynomial in universal basis");
    for (std::size_t j = 0; j < i; ++j)
      if (elements_[j] == f) throw DomainError("duplicate element in universal basis: " + f.to_string());
  }
}

bool UniversalBasis::is_toric_shaped() const {
  for (const auto& f : elements_) {
    if (f.size() != 2) return false;
    const auto& a = f.terms()[0];
    const auto& b = f.terms()[1];
    const Field& k = ring_->field();
    if (!k.is_zero(k.add(a.coeff, b.coeff))) return false;
    if (total_degree(a.exp) != total_degree(b.exp)) return false;
    if (!coprime(a.exp, b.exp)) return false;
  }
  return true;
}

std::uint32_t UniversalBasis::max_exponent() const {
  std::uint32_t m = 0;
  for (const auto& f : elements_)
    for (const auto& t : f.terms())
      for (auto e : t.exp) m = std::max(m, e);
  return m;
}

bool key_precedes(const GrobnerKey& a, const GrobnerKey& b) {
  const auto& x = a.gens.monomials;
  const auto& y = b.gens.monomials;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] != y[i]) return canonical_greater(x[i], y[i]);
  }
  return x.size() < y.size();
}

std::uint32_t entry_bit_width(std::uint32_t k_bound) {
  if (k_bound < 2) throw DomainError("k_bound must be at least 2");
  std::uint32_t w = 0;
  while ((std::uint64_t{1} << w) < k_bound) ++w;
  return w;
}

GrobnerKey canonical_key(const MonomialSet& gens, std::uint32_t k_bound) {
  const std::uint32_t width = entry_bit_width(k_bound);
  if (gens.monomials.empty()) throw DomainError("key from an empty generator set");
  for (const auto& m : gens.monomials)
    for (auto e : m)
      if (e >= k_bound)
        throw DomainError("exponent " + std::to_string(e) + " outside M_k for k = " +
                          std::to_string(k_bound));
  GrobnerKey key;
  key.gens = min_mono_gens(gens.monomials);
  if (key.gens.monomials.size() != gens.monomials.size())
    throw DomainError("key generators are not minimal");
  key.k_bound = k_bound;
  for (const auto& m : key.gens.monomials)
    for (auto e : m)
      for (std::uint32_t bit = width; bit-- > 0;) key.eta_raw += (e >> bit & 1) ? '1' : '0';
  key.key_bytes = eta_digest(key.eta_raw);
  return key;
}

bool verify_gb_under_order(const UniversalBasis& U, const MonomialOrder& order,
                           const GroebnerLimits& limits) {
  if (U.size() == 0) throw DomainError("empty universal basis");
  return is_groebner_basis(U.elements(), order, limits);
}

std::vector<Polynomial> trim(const UniversalBasis& U, const MonomialOrder& order) {
  return reduce_groebner_basis(U.elements(), order);
}

namespace {

void append_rows(const Polynomial& f, std::size_t pick, std::vector<Inequality>& rows) {
  const auto& sel = f.terms()[pick].exp;
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (t == pick) continue;
    const auto& other = f.terms()[t].exp;
    Inequality row;
    row.coeffs.resize(sel.size());
    for (std::size_t j = 0; j < sel.size(); ++j)
      row.coeffs[j] = static_cast<std::int64_t>(sel[j]) - static_cast<std::int64_t>(other[j]);
    row.rhs = 1;
    rows.push_back(std::move(row));
  }
}

void append_nonnegativity(std::size_t n, std::vector<Inequality>& rows) {
  for (std::size_t j = 0; j < n; ++j) {
    Inequality row;
    row.coeffs.assign(n, 0);
    row.coeffs[j] = 1;
    row.rhs = 0;
    rows.push_back(std::move(row));
  }
}

std::optional<WeightVector> integral_witness(const std::vector<Inequality>& rows, std::size_t n,
                                             const FeasibilityLimits& limits) {
  auto x = fourier_motzkin(rows, n, limits);
  if (!x) return std::nullopt;
  mpz_class den = 1;
  for (const auto& q : *x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  WeightVector w;
  w.reserve(n);
  for (const auto& q : *x) w.push_back(q.get_num() * (den / q.get_den()));
  return w;
}

GrobnerKey key_from_selection(const UniversalBasis& U, const TermSelection& sel,
                              std::uint32_t k_bound) {
  std::vector<Exponent> lead;
  lead.reserve(U.size());
  for (std::size_t i = 0; i < U.size(); ++i) lead.push_back(U.elements()[i].terms()[sel.picks[i]].exp);
  return canonical_key(min_mono_gens(lead), k_bound);
}

struct Found {
  GrobnerKey key;
  WeightVector witness;
  std::vector<std::size_t> picks;
};

// Depth-first over term selections, pruning any prefix whose margin system
// is already infeasible.
void search(const UniversalBasis& U, std::size_t depth, std::vector<std::size_t>& picks,
            const std::vector<Inequality>& rows, std::uint32_t k_bound,
            const FeasibilityLimits& limits, std::vector<Found>& out) {
  const std::size_t n = U.ring()->num_vars();
  if (depth == U.size()) {
    auto w = integral_witness(rows, n, limits);
    if (!w) return;
    out.push_back({key_from_selection(U, TermSelection{picks}, k_bound), std::move(*w), picks});
    return;
  }
  const Polynomial& f = U.elements()[depth];
  for (std::size_t t = 0; t < f.size(); ++t) {
    std::vector<Inequality> next = rows;
    append_rows(f, t, next);
    if (depth + 1 < U.size() && !fourier_motzkin(next, n, limits)) continue;
    picks.push_back(t);
    search(U, depth + 1, picks, next, k_bound, limits, out);
    picks.pop_back();
  }
}

KeyList finalize(std::vector<Found> found, bool sampled) {
  // Ties resolved by selection so the witness kept per key does not depend on
  // the visiting order.
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    if (key_precedes(a.key, b.key)) return true;
    if (key_precedes(b.key, a.key)) return false;
    return a.picks < b.picks;
  });
  KeyList list;
  list.sampled = sampled;
  for (auto& f : found) {
    if (!list.keys.empty() && list.keys.back().gens == f.key.gens) continue;
    list.keys.push_back(std::move(f.key));
    list.witness_weights.emplace_back(std::move(f.witness));
  }
  return list;
}

}  // namespace

std::optional<WeightVector> selection_feasible(const UniversalBasis& U, const TermSelection& sel,
                                               const FeasibilityLimits& limits) {
  if (sel.picks.size() != U.size()) throw DomainError("selection length does not match basis");
  const std::size_t n = U.ring()->num_vars();
  std::vector<Inequality> rows;
  append_nonnegativity(n, rows);
  for (std::size_t i = 0; i < U.size(); ++i) {
    if (sel.picks[i] >= U.elements()[i].size()) throw DomainError("term index out of range");
    append_rows(U.elements()[i], sel.picks[i], rows);
  }
  return integral_witness(rows, n, limits);
}

MonomialOrder witness_order(const WeightVector& w) {
  std::vector<mpq_class> q;
  q.reserve(w.size());
  for (const auto& x : w) q.emplace_back(x);
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return MonomialOrder::weight(q, std::move(perm));
}

TermSelection selection_under(const UniversalBasis& U, const MonomialOrder& order) {
  TermSelection sel;
  sel.picks.reserve(U.size());
  for (const auto& f : U.elements()) sel.picks.push_back(f.leading_index(order));
  return sel;
}

GrobnerKey key_under_order(const UniversalBasis& U, const MonomialOrder& order,
                           std::uint32_t k_bound) {
  return key_from_selection(U, selection_under(U, order), k_bound);
}

std::uint32_t default_k_bound(const UniversalBasis& U) {
  return std::max<std::uint32_t>(2, U.max_exponent() + 1);
}

KeyList enumerate_keys(const UniversalBasis& U, const EnumerateOptions& opts) {
  if (U.size() == 0) throw DomainError("empty universal basis");
  const std::uint32_t k_bound = opts.k_bound ? opts.k_bound : default_k_bound(U);
  const std::size_t n = U.ring()->num_vars();

  if (opts.mode == EnumerateOptions::Mode::Sample) {
    Rng rng(opts.seed);
    std::vector<Found> found;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t s = 0; s < opts.sample_count; ++s) {
      const MonomialOrder order =
          s % 2 == 0 ? random_lex_order(n, rng) : random_weight_order(n, rng);
      TermSelection sel = selection_under(U, order);
      if (!seen.insert(sel.picks).second) continue;
      auto w = selection_feasible(U, sel, opts.fm);
      if (!w) throw std::logic_error("selection realized by an order is infeasible");
      found.push_back({key_from_selection(U, sel, k_bound), std::move(*w), sel.picks});
    }
    return finalize(std::move(found), true);
  }

  mpz_class product = 1;
  for (const auto& f : U.elements()) product *= static_cast<unsigned long>(f.size());
  if (product > mpz_class(std::to_string(opts.selection_cap)))
    throw ResourceError("exact enumeration would visit " + product.get_str() +
                        " selections (cap " + std::to_string(opts.selection_cap) +
                        "); use sample mode");

  std::vector<Inequality> base;
  append_nonnegativity(n, base);

  if (opts.threads <= 1 || U.size() < 2) {
    std::vector<Found> found;
    std::vector<std::size_t> picks;
    search(U, 0, picks, base, k_bound, opts.fm, found);
    return finalize(std::move(found), false);
  }

  // Expand a frontier of feasible prefixes, then fan the subtrees out.
  struct Prefix {
    std::vector<std::size_t> picks;
    std::vector<Inequality> rows;
  };
  std::vector<Prefix> frontier{{{}, base}};
  std::size_t depth = 0;
  while (depth + 1 < U.size() && frontier.size() < 4 * opts.threads) {
    std::vector<Prefix> next;
    const Polynomial& f = U.elements()[depth];
    for (const auto& p : frontier) {
      for (std::size_t t = 0; t < f.size(); ++t) {
        Prefix q{p.picks, p.rows};
        append_rows(f, t, q.rows);
        if (!fourier_motzkin(q.rows, n, opts.fm)) continue;
        q.picks.push_back(t);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  std::vector<std::vector<Found>> per_thread(opts.threads);
  std::vector<std::exception_ptr> errors(opts.threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < opts.threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < frontier.size(); i += opts.threads) {
            auto picks = frontier[i].picks;
            search(U, depth, picks, frontier[i].rows, k_bound, opts.fm, per_thread[t]);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Found> found;
  for (auto& v : per_thread)
    for (auto& f : v) found.push_back(std::move(f));
  return finalize(std::move(found), false);
}

}  // namespace gbke
