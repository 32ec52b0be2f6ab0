#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace gbke {

/// Coefficient value. Residues are kept in [0, p); rationals are always
/// canonical (mpq_class canonicalizes after every operation we perform).
using FieldElement = std::variant<std::uint64_t, mpq_class>;

/// The coefficient field: either Q or F_p for a prime p < 2^32.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  /// "q" or "fp:P".
  static Field parse(const std::string& spec);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  /// Accepts "7", "-3", "3/4" (over F_p the denominator is inverted).
  FieldElement parse_element(const std::string& s) const;
  std::string format(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  /// Throws DomainError on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
  }
  /// a - c*b, the inner step of every reduction.
  FieldElement sub_mul(const FieldElement& a, const FieldElement& c,
                       const FieldElement& b) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace gbke
