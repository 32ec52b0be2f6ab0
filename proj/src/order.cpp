#include "gbke/order.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gbke {

namespace {

void check_perm(const std::vector<std::size_t>& perm) {
  if (perm.empty()) throw DomainError("monomial order over zero variables");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p])
      throw DomainError("variable precedence is not a permutation");
    seen[p] = true;
  }
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> perm)
    : kind_(kind), perm_(std::move(perm)) {
  check_perm(perm_);
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> perm) {
  return MonomialOrder(Kind::Lex, std::move(perm));
}
MonomialOrder MonomialOrder::lex(std::size_t n) { return lex(identity(n)); }
MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> perm) {
  return MonomialOrder(Kind::Grevlex, std::move(perm));
}
MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  return grevlex(identity(n));
}

MonomialOrder MonomialOrder::weight(const std::vector<mpq_class>& w,
                                    std::vector<std::size_t> tiebreak) {
  MonomialOrder o(Kind::Weight, std::move(tiebreak));
  if (w.size() != o.perm_.size())
    throw DomainError("weight vector length does not match tiebreak");
  mpz_class den = 1;
  for (const auto& x : w) {
    if (sgn(x) < 0) throw DomainError("weight vectors must be nonnegative");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  o.weights_.reserve(w.size());
  for (const auto& x : w) o.weights_.push_back(mpz_class(x.get_num() * (den / x.get_den())));
  mpz_class g = 0;
  for (const auto& x : o.weights_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : o.weights_) x /= g;
  o.small_ = std::all_of(o.weights_.begin(), o.weights_.end(),
                         [](const mpz_class& x) { return x < (1L << 31); });
  if (o.small_)
    for (const auto& x : o.weights_) o.small_weights_.push_back(x.get_si());
  return o;
}

MonomialOrder MonomialOrder::weight(const std::vector<long long>& w,
                                    std::vector<std::size_t> tiebreak) {
  std::vector<mpq_class> q;
  q.reserve(w.size());
  for (auto x : w) q.emplace_back(mpz_class(static_cast<long>(x)));
  return weight(q, std::move(tiebreak));
}

MonomialOrder MonomialOrder::lex_by_names(
    const RingContext& ring, const std::vector<std::string>& names) {
  if (names.size() != ring.num_vars())
    throw DomainError("lex order must list every variable once");
  std::vector<std::size_t> perm;
  for (const auto& n : names) perm.push_back(ring.var_index(n));
  return lex(std::move(perm));
}

std::strong_ordering MonomialOrder::compare_lex(const Exponent& a,
                                                const Exponent& b) const {
  for (auto i : perm_)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Exponent& a,
                                            const Exponent& b) const {
  switch (kind_) {
    case Kind::Lex:
      return compare_lex(a, b);
    case Kind::Grevlex: {
      const auto da = total_degree(a), db = total_degree(b);
      if (da != db) return da <=> db;
      for (auto it = perm_.rbegin(); it != perm_.rend(); ++it)
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
      return std::strong_ordering::equal;
    }
    case Kind::Weight: {
      if (small_) {
        __int128 s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
          s += static_cast<__int128>(small_weights_[i]) *
               (static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]));
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      } else {
        mpz_class s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] == b[i]) continue;
          mpz_class d = static_cast<long>(a[i]) - static_cast<long>(b[i]);
          s += weights_[i] * d;
        }
        if (sgn(s) != 0) return sgn(s) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return compare_lex(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe(const RingContext& ring) const {
  std::ostringstream os;
  auto chain = [&] {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      os << (i ? ">" : "") << ring.var_name(perm_[i]);
  };
  switch (kind_) {
    case Kind::Lex: os << "lex:"; chain(); break;
    case Kind::Grevlex: os << "grevlex:"; chain(); break;
    case Kind::Weight:
      os << "weight:[";
      for (std::size_t i = 0; i < weights_.size(); ++i)
        os << (i ? "," : "") << weights_[i].get_str();
      os << "];lex:";
      chain();
      break;
  }
  return os.str();
}

Cmp cmp_monomials(const MonomialOrder& order, const Exponent& a,
                  const Exponent& b) {
  if (a.size() != order.num_vars() || b.size() != order.num_vars())
    throw DomainError("exponent length does not match the ring");
  const auto c = order.compare(a, b);
  if (c == std::strong_ordering::less) return Cmp::Less;
  if (c == std::strong_ordering::greater) return Cmp::Greater;
  return Cmp::Equal;
}

}  // namespace gbke
