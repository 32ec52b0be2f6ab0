#include "gbke/field.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <cctype>

namespace gbke {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw DomainError("field characteristic must be a prime below 2^32, got " +
                      std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q" || spec == "rationals") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw DomainError("bad field spec '" + spec + "'");
    return prime(std::stoull(digits));
  }
  throw DomainError("bad field spec '" + spec + "' (expected q or fp:P)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(p_);
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
  if (is_rational()) return mpq_class(mpz_class(static_cast<long>(v)));
  const auto p = static_cast<long long>(p_);
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

FieldElement Field::parse_element(const std::string& s) const {
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw DomainError("bad coefficient '" + s + "'");
  q.canonicalize();
  if (is_rational()) return q;
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
  if (num < 0) num += static_cast<unsigned long>(p_);
  if (den == 0) throw DomainError("coefficient denominator vanishes mod p: " + s);
  return div(FieldElement(static_cast<std::uint64_t>(num.get_ui())),
             FieldElement(static_cast<std::uint64_t>(den.get_ui())));
}

std::string Field::format(const FieldElement& a) const {
  if (is_rational()) return std::get<mpq_class>(a).get_str();
  return std::to_string(std::get<std::uint64_t>(a));
}

bool Field::is_zero(const FieldElement& a) const {
  if (is_rational()) return sgn(std::get<mpq_class>(a)) == 0;
  return std::get<std::uint64_t>(a) == 0;
}

bool Field::is_one(const FieldElement& a) const {
  if (is_rational()) return std::get<mpq_class>(a) == 1;
  return std::get<std::uint64_t>(a) == 1;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (is_rational())
    return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
  std::uint64_t r = std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b);
  return r >= p_ ? r - p_ : r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (is_rational())
    return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
  const std::uint64_t x = std::get<std::uint64_t>(a);
  const std::uint64_t y = std::get<std::uint64_t>(b);
  return x >= y ? x - y : x + p_ - y;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (is_rational())
    return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
  return (std::get<std::uint64_t>(a) * std::get<std::uint64_t>(b)) % p_;
}

FieldElement Field::neg(const FieldElement& a) const {
  if (is_rational()) return mpq_class(-std::get<mpq_class>(a));
  const std::uint64_t x = std::get<std::uint64_t>(a);
  return x == 0 ? x : p_ - x;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw DomainError("division by zero in coefficient field");
  if (is_rational()) return mpq_class(1 / std::get<mpq_class>(a));
  // Fermat: a^(p-2)
  std::uint64_t base = std::get<std::uint64_t>(a);
  std::uint64_t e = p_ - 2;
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return r;
}

FieldElement Field::sub_mul(const FieldElement& a, const FieldElement& c,
                            const FieldElement& b) const {
  if (is_rational())
    return mpq_class(std::get<mpq_class>(a) -
                     std::get<mpq_class>(c) * std::get<mpq_class>(b));
  return sub(a, mul(c, b));
}

}  // namespace gbke
