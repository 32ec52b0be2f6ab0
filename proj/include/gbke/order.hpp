#pragma once

#include "gbke/ring.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gbke {

/// A monomial order on K[x_1..x_n].
///
/// - lex(perm): x_{perm[0]} > x_{perm[1]} > ... compared lexicographically.
/// - grevlex(perm): total degree first, ties broken by the smallest exponent
///   of the last variable in perm order.
/// - weight(w, perm): w.a first, ties broken by lex(perm). Weights are
///   nonnegative rationals; they are stored scaled to integers, which does not
///   change the order.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Weight };

  static MonomialOrder lex(std::vector<std::size_t> perm);
  static MonomialOrder lex(std::size_t n);  // identity permutation
  static MonomialOrder grevlex(std::vector<std::size_t> perm);
  static MonomialOrder grevlex(std::size_t n);
  static MonomialOrder weight(const std::vector<mpq_class>& w,
                              std::vector<std::size_t> tiebreak);
  static MonomialOrder weight(const std::vector<long long>& w,
                              std::vector<std::size_t> tiebreak);
  /// Lex order with variables listed from greatest to least by name,
  /// e.g. lex_by_names(ring, "dabcefg").
  static MonomialOrder lex_by_names(const RingContext& ring,
                                    const std::vector<std::string>& names);

  Kind kind() const { return kind_; }
  std::size_t num_vars() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  /// Integer-scaled weights (empty unless kind() == Weight).
  const std::vector<mpz_class>& weights() const { return weights_; }

  /// Three-way comparison; assumes equal lengths (see cmp_monomials).
  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Human-readable form: "lex:a>b>c", "grevlex:...", "weight:[..];lex:...".
  std::string describe(const RingContext& ring) const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && perm_ == o.perm_ && weights_ == o.weights_;
  }

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> perm);

  std::strong_ordering compare_lex(const Exponent& a, const Exponent& b) const;

  Kind kind_;
  std::vector<std::size_t> perm_;
  std::vector<mpz_class> weights_;
  // Fast path when every weight fits in 32 bits.
  std::vector<std::int64_t> small_weights_;
  bool small_ = false;
};

enum class Cmp { Less, Equal, Greater };

/// Checked comparison: DomainError on length mismatch.
Cmp cmp_monomials(const MonomialOrder& order, const Exponent& a,
                  const Exponent& b);

}  // namespace gbke
