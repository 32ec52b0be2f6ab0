#pragma once

#include "gbke/field.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gbke {

/// Polynomial ring K[x_1..x_n]: number of variables, coefficient field and
/// printable variable names. Immutable; shared by every polynomial over it.
class RingContext {
 public:
  RingContext(Field field, std::vector<std::string> var_names);

  std::size_t num_vars() const { return names_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(std::size_t i) const { return names_[i]; }
  /// Index of a variable by name; throws DomainError when unknown.
  std::size_t var_index(const std::string& name) const;

  bool operator==(const RingContext& o) const {
    return field_ == o.field_ && names_ == o.names_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(Field field, std::vector<std::string> var_names);
/// Ring with variables named by the given letters, e.g. "abcdefg".
Ring make_ring(Field field, const std::string& single_letter_vars);

/// Default coefficient field for protocol work: F_32003.
Field default_field();

/// Exponent vector of a monomial x^a. Length equals the ring's n.
using Exponent = std::vector<std::uint32_t>;

bool divides(const Exponent& a, const Exponent& b);  // a | b
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent gcd(const Exponent& a, const Exponent& b);
Exponent operator+(const Exponent& a, const Exponent& b);
/// b - a, requires a | b.
Exponent quotient(const Exponent& b, const Exponent& a);
std::uint64_t total_degree(const Exponent& a);
bool coprime(const Exponent& a, const Exponent& b);

}  // namespace gbke
