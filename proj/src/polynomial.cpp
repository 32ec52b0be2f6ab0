#include "gbke/polynomial.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace gbke {

bool canonical_greater(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial without a ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial without a ring");
  const Field& k = ring_->field();
  for (const auto& t : terms)
    if (t.exp.size() != ring_->num_vars())
      throw DomainError("exponent length does not match the ring");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return canonical_greater(a.exp, b.exp);
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
      if (k.is_zero(terms_.back().coeff)) terms_.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(Ring ring, const FieldElement& c) {
  Exponent zero(ring->num_vars(), 0);
  return monomial(std::move(ring), c, std::move(zero));
}

Polynomial Polynomial::monomial(Ring ring, const FieldElement& c, Exponent e) {
  std::vector<Term> t;
  t.push_back({c, std::move(e)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::binomial(Ring ring, Exponent plus, Exponent minus) {
  const Field& k = ring->field();
  std::vector<Term> t;
  t.push_back({k.one(), std::move(plus)});
  t.push_back({k.from_int(-1), std::move(minus)});
  return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

std::size_t Polynomial::leading_index(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (order.greater(terms_[i].exp, terms_[best].exp)) best = i;
  return best;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw DomainError("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  const Field& k = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && canonical_greater(terms_[i].exp, o.terms_[j].exp))) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || canonical_greater(o.terms_[j].exp, terms_[i].exp)) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldElement c = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!k.is_zero(c)) out.push_back({std::move(c), terms_[i].exp});
      ++i;
      ++j;
    }
  }
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().from_int(-1)); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  const Field& k = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({k.mul(a.coeff, b.coeff), a.exp + b.exp});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  const Field& k = ring_->field();
  Polynomial r(ring_);
  if (k.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({k.mul(c, t.coeff), t.exp});
  return r;
}

Polynomial Polynomial::times_monomial(const FieldElement& c, const Exponent& e) const {
  const Field& k = ring_->field();
  Polynomial r(ring_);
  if (k.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves lex order.
  for (const auto& t : terms_) r.terms_.push_back({k.mul(c, t.coeff), t.exp + e});
  return r;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_term(order).coeff));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(*ring_ == *o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != o.terms_[i].exp) return false;
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string format_monomial(const RingContext& ring, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.var_name(i);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_->field();
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string c = k.format(t.coeff);
    bool negative = false;
    if (k.is_rational() && c[0] == '-') {
      negative = true;
      c.erase(0, 1);
    } else if (!k.is_rational() && k.is_one(k.neg(t.coeff))) {
      negative = true;
      c = "1";
    }
    if (i == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const bool unit_monomial = total_degree(t.exp) == 0;
    if (unit_monomial) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += format_monomial(*ring_, t.exp);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

namespace {

class Parser {
 public:
  Parser(const RingContext& ring, const std::string& text) : ring_(ring), s_(text) {}

  std::vector<Term> parse_sum() {
    const Field& k = ring_.field();
    std::vector<Term> terms;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_product();
      if (negative) t.coeff = k.neg(t.coeff);
      terms.push_back(std::move(t));
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    return terms;
  }

  Exponent parse_monomial_only() {
    skip();
    Term t = parse_product();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    if (!ring_.field().is_one(t.coeff)) fail("coefficient in monomial");
    return t.exp;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polynomial parse error at offset " + std::to_string(pos_) +
                      ": " + what + " in '" + s_ + "'");
  }
  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Term parse_product() {
    const Field& k = ring_.field();
    Term t{k.one(), Exponent(ring_.num_vars(), 0)};
    for (;;) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          num += "/" + digits();
        }
        t.coeff = k.mul(t.coeff, k.parse_element(num));
      } else if (ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        const std::size_t var = ring_.var_index(s_.substr(start, pos_ - start));
        skip();
        std::uint32_t e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          e = static_cast<std::uint32_t>(std::stoul(digits()));
        }
        t.exp[var] += e;
      } else {
        fail("expected a number or variable");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  const RingContext& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(Ring ring, const std::string& text) {
  Parser p(*ring, text);
  auto terms = p.parse_sum();
  return Polynomial(std::move(ring), std::move(terms));
}

Exponent parse_monomial(const RingContext& ring, const std::string& text) {
  Parser p(ring, text);
  return p.parse_monomial_only();
}

}  // namespace gbke
