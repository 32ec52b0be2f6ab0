#include "gbke/ring.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <set>

namespace gbke {

RingContext::RingContext(Field field, std::vector<std::string> var_names)
    : field_(field), names_(std::move(var_names)) {
  if (names_.empty()) throw DomainError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second)
      throw DomainError("duplicate variable name '" + n + "'");
  }
}

std::size_t RingContext::var_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw DomainError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

Ring make_ring(Field field, std::vector<std::string> var_names) {
  return std::make_shared<const RingContext>(field, std::move(var_names));
}

Ring make_ring(Field field, const std::string& single_letter_vars) {
  std::vector<std::string> names;
  for (char c : single_letter_vars) names.emplace_back(1, c);
  return make_ring(field, std::move(names));
}

Field default_field() { return Field::prime(32003); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent gcd(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

std::uint64_t total_degree(const Exponent& a) {
  std::uint64_t d = 0;
  for (auto e : a) d += e;
  return d;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

}  // namespace gbke
