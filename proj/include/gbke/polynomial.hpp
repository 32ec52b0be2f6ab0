#pragma once

#include "gbke/order.hpp"
#include "gbke/ring.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gbke {

struct Term {
  FieldElement coeff;
  Exponent exp;
};

/// Sparse polynomial over a RingContext.
///
/// Terms are stored with nonzero coefficients, distinct exponents, in
/// descending lex order with x_1 > x_2 > ... > x_n, whatever order a
/// computation used. Equality is therefore structural.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  /// Normalizes: merges equal exponents, drops zeros, sorts canonically.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const FieldElement& c);
  static Polynomial monomial(Ring ring, const FieldElement& c, Exponent e);
  /// Binomial x^plus - x^minus.
  static Polynomial binomial(Ring ring, Exponent plus, Exponent minus);
  /// Parses "a*g - b*f", "3/2*x^2*y + 1", etc.
  static Polynomial parse(Ring ring, const std::string& text);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint64_t degree() const;  // max total degree, 0 for zero

  /// Index into terms() of the leading term under `order`; requires nonzero.
  std::size_t leading_index(const MonomialOrder& order) const;
  const Term& leading_term(const MonomialOrder& order) const {
    return terms_[leading_index(order)];
  }
  const Exponent& leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).exp;
  }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const FieldElement& c, const Exponent& e) const;
  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Renders x^e with the ring's variable names ("a*c^2*e", "1").
std::string format_monomial(const RingContext& ring, const Exponent& e);
/// Parses "a*c^2*e" or "1".
Exponent parse_monomial(const RingContext& ring, const std::string& text);

/// Canonical descending lex comparison used for storage: true when a > b.
bool canonical_greater(const Exponent& a, const Exponent& b);

}  // namespace gbke
