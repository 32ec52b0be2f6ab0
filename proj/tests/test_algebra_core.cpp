#include "gbke/errors.hpp"
#include "gbke/groebner.hpp"
#include "gbke/monomial_set.hpp"
#include "gbke/random.hpp"

#include <gtest/gtest.h>

using namespace gbke;

namespace {

Ring seven(Field k = Field::rationals()) { return make_ring(k, "abcdefg"); }

Polynomial P(const Ring& r, const std::string& s) { return Polynomial::parse(r, s); }

Exponent M(const Ring& r, const std::string& s) { return parse_monomial(*r, s); }

MonomialOrder lex_names(const Ring& r, const std::string& letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return MonomialOrder::lex_by_names(*r, names);
}

std::vector<Exponent> lms(const std::vector<Polynomial>& G, const MonomialOrder& o) {
  return leading_monomials(G, o);
}

}  // namespace

// ---------------------------------------------------------------------------
// Field and polynomial plumbing
// ---------------------------------------------------------------------------

TEST(Field, PrimeArithmetic) {
  const Field k = Field::prime(7);
  EXPECT_EQ(std::get<std::uint64_t>(k.add(k.from_int(5), k.from_int(4))), 2u);
  EXPECT_EQ(std::get<std::uint64_t>(k.from_int(-1)), 6u);
  EXPECT_TRUE(k.is_one(k.mul(k.from_int(3), k.inv(k.from_int(3)))));
  EXPECT_EQ(std::get<std::uint64_t>(k.parse_element("1/2")), 4u);
  EXPECT_THROW(Field::prime(8), DomainError);
  EXPECT_THROW(k.inv(k.zero()), DomainError);
}

TEST(Field, ParseSpec) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_EQ(Field::parse("fp:32003").characteristic(), 32003u);
  EXPECT_EQ(default_field().characteristic(), 32003u);
  EXPECT_THROW(Field::parse("fp:x"), DomainError);
}

TEST(Ring, RejectsDuplicateNames) {
  EXPECT_THROW(make_ring(Field::rationals(), std::vector<std::string>{"x", "x"}), DomainError);
  EXPECT_THROW(make_ring(Field::rationals(), std::vector<std::string>{}), DomainError);
}

TEST(Polynomial, ParsePrintRoundTrip) {
  const Ring r = seven();
  const Polynomial f = P(r, "  a*c^2*e - b*d*g ");
  EXPECT_EQ(f.to_string(), "a*c^2*e - b*d*g");
  EXPECT_EQ(P(r, f.to_string()), f);
  EXPECT_EQ(P(r, "3/2*a - 1/2*a").to_string(), "a");
  EXPECT_EQ(P(r, "b*f - a*g").to_string(), "-a*g + b*f");
  EXPECT_TRUE(P(r, "a - a").is_zero());
  EXPECT_THROW(P(r, "a + z"), DomainError);
  EXPECT_THROW(P(r, "a +* b"), DomainError);
}

TEST(Polynomial, CanonicalStorageIgnoresInputOrder) {
  const Ring r = seven();
  EXPECT_EQ(P(r, "g + a + c*e"), P(r, "c*e + g + a"));
}

TEST(Polynomial, Arithmetic) {
  const Ring r = seven();
  const Polynomial f = P(r, "a - b");
  const Polynomial g = P(r, "a + b");
  EXPECT_EQ(f * g, P(r, "a^2 - b^2"));
  EXPECT_EQ(f + g, P(r, "2*a"));
  EXPECT_EQ(f - f, Polynomial(r));
}

// ---------------------------------------------------------------------------
// cmp_monomials
// ---------------------------------------------------------------------------

TEST(CmpMonomials, LexPutsAgBeforeCe) {
  const Ring r = seven();
  EXPECT_EQ(cmp_monomials(MonomialOrder::lex(7), M(r, "a*g"), M(r, "c*e")), Cmp::Greater);
}

TEST(CmpMonomials, Reflexive) {
  const Ring r = seven();
  for (const auto& o : {MonomialOrder::lex(7), MonomialOrder::grevlex(7),
                        MonomialOrder::weight(std::vector<long long>{1, 2, 3, 4, 5, 6, 7},
                                              {0, 1, 2, 3, 4, 5, 6})})
    EXPECT_EQ(cmp_monomials(o, M(r, "a*c^2*e"), M(r, "a*c^2*e")), Cmp::Equal);
}

TEST(CmpMonomials, WeightOrderWithTiebreak) {
  const Ring r = make_ring(Field::rationals(), "xy");
  const auto w = MonomialOrder::weight(std::vector<long long>{2, 10}, {0, 1});
  EXPECT_EQ(cmp_monomials(w, M(r, "x^10"), M(r, "x^2*y")), Cmp::Greater);
  // 20 = 20 on the weights; x > y breaks the tie.
  EXPECT_EQ(cmp_monomials(w, M(r, "x^10"), M(r, "y^2")), Cmp::Greater);
  const Polynomial f = P(r, "x^2*y + x^10 - y^2");
  EXPECT_EQ(format_monomial(*r, f.leading_monomial(w)), "x^10");
}

TEST(CmpMonomials, RationalWeightsScale) {
  const auto a = MonomialOrder::weight(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(3, 4)}, {0, 1});
  const auto b = MonomialOrder::weight(std::vector<long long>{2, 3}, {0, 1});
  EXPECT_EQ(a, b);
}

TEST(CmpMonomials, DimensionMismatch) {
  EXPECT_THROW(cmp_monomials(MonomialOrder::lex(3), Exponent{1, 0}, Exponent{0, 1, 0}), DomainError);
  EXPECT_THROW(MonomialOrder::lex(std::vector<std::size_t>{0, 0}), DomainError);
  EXPECT_THROW(MonomialOrder::weight(std::vector<long long>{-1, 1}, {0, 1}), DomainError);
}

TEST(CmpMonomials, GrevlexSmallDegreeTieBreak) {
  const Ring r = make_ring(Field::rationals(), "xyz");
  const auto o = MonomialOrder::grevlex(3);
  EXPECT_EQ(cmp_monomials(o, M(r, "x*z"), M(r, "y^2")), Cmp::Less);  // z appears: smaller
  EXPECT_EQ(cmp_monomials(o, M(r, "x^3"), M(r, "y*z")), Cmp::Greater);
}

// Order axioms over random pairs, per sampled order.
TEST(CmpMonomials, OrderAxiomsRandomized) {
  Rng rng(7);
  const std::size_t n = 5;
  auto random_exp = [&] {
    Exponent e(n);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(4));
    return e;
  };
  for (int sample = 0; sample < 6; ++sample) {
    const MonomialOrder o = sample % 3 == 0   ? random_lex_order(n, rng)
                            : sample % 3 == 1 ? MonomialOrder::grevlex(rng.permutation(n))
                                              : random_weight_order(n, rng);
    const Exponent one(n, 0);
    for (int i = 0; i < 1000; ++i) {
      const Exponent a = random_exp(), b = random_exp(), c = random_exp();
      const Cmp ab = cmp_monomials(o, a, b);
      const Cmp ba = cmp_monomials(o, b, a);
      EXPECT_EQ(ab == Cmp::Equal, a == b);
      EXPECT_EQ(ab == Cmp::Greater, ba == Cmp::Less);
      EXPECT_EQ(cmp_monomials(o, a + c, b + c), ab);
      EXPECT_NE(cmp_monomials(o, one, a), Cmp::Greater);
    }
  }
}

// ---------------------------------------------------------------------------
// normal_form, s_polynomial, buchberger
// ---------------------------------------------------------------------------

TEST(NormalForm, IrreducibleSPolynomialRemainder) {
  const Ring r = seven();
  const auto o2 = lex_names(r, "dabcefg");
  const Polynomial f = P(r, "b*d*f - a*c*e");
  EXPECT_EQ(normal_form(f, {P(r, "a*g - b*f"), P(r, "d*g - c*e")}, o2), f);
}

TEST(NormalForm, SelfReductionIsZero) {
  const Ring r = seven();
  const Polynomial g = P(r, "a*g - b*f");
  EXPECT_TRUE(normal_form(g, {g}, MonomialOrder::grevlex(7)).is_zero());
}

TEST(NormalForm, IdealMembershipOfAceMinusBdf) {
  const Ring r = seven();
  const Polynomial combo = P(r, "a") * P(r, "c*e - d*g") + P(r, "d") * P(r, "a*g - b*f");
  EXPECT_EQ(combo, P(r, "a*c*e - b*d*f"));
  EXPECT_TRUE(normal_form(combo, {P(r, "a*g - b*f"), P(r, "c*e - d*g")}, MonomialOrder::lex(7)).is_zero());
}

TEST(NormalForm, Errors) {
  const Ring r = seven();
  const Ring other = make_ring(Field::rationals(), "xy");
  EXPECT_THROW(normal_form(P(r, "a"), {}, MonomialOrder::lex(7)), DomainError);
  EXPECT_THROW(normal_form(P(r, "a"), {Polynomial::parse(other, "x")}, MonomialOrder::lex(7)), DomainError);
  EXPECT_THROW(normal_form(P(r, "a"), {Polynomial(r)}, MonomialOrder::lex(7)), DomainError);
}

TEST(SPolynomial, SecondLexOrderExample) {
  const Ring r = seven();
  const auto o2 = lex_names(r, "dabcefg");
  EXPECT_EQ(s_polynomial(P(r, "d*g - c*e"), P(r, "a*g - b*f"), o2), P(r, "b*d*f - a*c*e"));
}

TEST(SPolynomial, SelfIsZero) {
  const Ring r = seven();
  const Polynomial f = P(r, "a*c^2*e - b*d*g + 3*a");
  EXPECT_TRUE(s_polynomial(f, f, MonomialOrder::grevlex(7)).is_zero());
  EXPECT_THROW(s_polynomial(f, Polynomial(r), MonomialOrder::lex(7)), DomainError);
}

TEST(SPolynomial, CoprimePairReducesToZero) {
  // Worked by hand: lcm = aceg, S = ce(ag - bf) - ag(ce - dg) = adg^2 - bcef.
  const Ring r = seven();
  const auto lex = MonomialOrder::lex(7);
  const Polynomial f = P(r, "a*g - b*f"), g = P(r, "c*e - d*g");
  const Polynomial s = s_polynomial(f, g, lex);
  EXPECT_EQ(s, P(r, "a*d*g^2 - b*c*e*f"));
  EXPECT_TRUE(normal_form(s, {f, g}, lex).is_zero());
}

TEST(Buchberger, GeneratorsAlreadyReduced) {
  const Ring r = seven();
  const auto lex = MonomialOrder::lex(7);
  const auto G = buchberger({P(r, "a*g - b*f"), P(r, "c*e - d*g")}, lex);
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(G[0], P(r, "a*g - b*f"));
  EXPECT_EQ(G[1], P(r, "c*e - d*g"));
}

TEST(Buchberger, NewElementUnderSecondLexOrder) {
  const Ring r = seven();
  const auto o2 = lex_names(r, "dabcefg");
  const auto G = buchberger({P(r, "a*g - b*f"), P(r, "c*e - d*g")}, o2);
  const MonomialSet in = min_mono_gens(lms(G, o2));
  const MonomialSet expected = min_mono_gens({M(r, "a*g"), M(r, "b*d*f"), M(r, "d*g")});
  EXPECT_EQ(in, expected);
  EXPECT_EQ(G.size(), 3u);
  EXPECT_TRUE(is_groebner_basis(G, o2));
}

TEST(Buchberger, PrincipalIdeal) {
  const Ring r = make_ring(Field::rationals(), "xy");
  for (const auto& o : {MonomialOrder::lex(2), MonomialOrder::grevlex(2)})
    EXPECT_EQ(buchberger({P(r, "x - y")}, o), std::vector<Polynomial>{P(r, "x - y")});
}

TEST(Buchberger, MonicOverBothFields) {
  for (const Field k : {Field::rationals(), Field::prime(32003)}) {
    const Ring r = make_ring(k, "xyz");
    const auto G = buchberger({P(r, "2*x^2 - 3*y*z"), P(r, "5*x*y - z^2")}, MonomialOrder::grevlex(3));
    for (const auto& g : G) EXPECT_TRUE(k.is_one(g.leading_term(MonomialOrder::grevlex(3)).coeff));
    EXPECT_TRUE(is_groebner_basis(G, MonomialOrder::grevlex(3)));
  }
}

TEST(Buchberger, UnitIdeal) {
  const Ring r = make_ring(Field::rationals(), "xy");
  const auto G = buchberger({P(r, "x*y - 1"), P(r, "x")}, MonomialOrder::lex(2));
  EXPECT_EQ(G, std::vector<Polynomial>{P(r, "1")});
}

TEST(Buchberger, DegreeGuard) {
  const Ring r = make_ring(Field::rationals(), "xyz");
  GroebnerLimits tight;
  tight.max_degree = 3;
  EXPECT_THROW(buchberger({P(r, "x^3 - y^2*z"), P(r, "x*y - z^2")}, MonomialOrder::lex(3), tight),
               ResourceError);
  GroebnerLimits tiny;
  tiny.max_basis_size = 2;
  EXPECT_THROW(buchberger({P(r, "x^2 - y"), P(r, "x*y - z")}, MonomialOrder::lex(3), tiny),
               ResourceError);
}

namespace {

std::vector<Polynomial> random_binomials(const Ring& r, Rng& rng, std::size_t count) {
  const std::size_t n = r->num_vars();
  std::vector<Polynomial> out;
  while (out.size() < count) {
    Exponent a(n, 0), b(n, 0);
    for (int t = 0; t < 2; ++t) {
      a[rng.below(n)] += 1;
      b[rng.below(n)] += 1;
    }
    if (a == b) continue;
    out.push_back(Polynomial::binomial(r, a, b));
  }
  return out;
}

}  // namespace

// Buchberger correctness, uniqueness under shuffling, ideal preservation.
TEST(Buchberger, PropertiesOnRandomBinomialIdeals) {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const Ring r = make_ring(Field::prime(32003), "abcde");
    auto F = random_binomials(r, rng, 3);
    const MonomialOrder o = random_monomial_order(5, rng);
    const auto G = buchberger(F, o);
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j)
        EXPECT_TRUE(normal_form(s_polynomial(G[i], G[j], o), G, o).is_zero());
    for (const auto& f : F) EXPECT_TRUE(normal_form(f, G, o).is_zero());
    for (const auto& g : G) EXPECT_TRUE(normal_form(g, buchberger(F, o), o).is_zero());
    auto shuffled = F;
    rng.shuffle(shuffled);
    EXPECT_EQ(buchberger(shuffled, o), G);
    // Ideal equality checked under a second random order.
    const MonomialOrder o2 = random_monomial_order(5, rng);
    const auto G2 = buchberger(F, o2);
    for (const auto& g : G) EXPECT_TRUE(normal_form(g, G2, o2).is_zero());
    for (const auto& g : G2) EXPECT_TRUE(normal_form(g, G, o).is_zero());
  }
}

// ---------------------------------------------------------------------------
// min_mono_gens and in_Mk
// ---------------------------------------------------------------------------

TEST(MinMonoGens, DropsMultiples) {
  const Ring r = seven();
  const auto m = min_mono_gens({M(r, "b*f"), M(r, "d*g"), M(r, "b*d*f")});
  EXPECT_TRUE(m.minimal);
  EXPECT_EQ(m.monomials, (std::vector<Exponent>{M(r, "b*f"), M(r, "d*g")}));
}

TEST(MinMonoGens, CanonicalOrder) {
  const Ring r = seven();
  EXPECT_EQ(min_mono_gens({M(r, "c*e"), M(r, "a*g")}).monomials,
            (std::vector<Exponent>{M(r, "a*g"), M(r, "c*e")}));
  EXPECT_EQ(min_mono_gens({M(r, "a*c^2*e")}).monomials, (std::vector<Exponent>{M(r, "a*c^2*e")}));
  EXPECT_THROW(min_mono_gens(std::vector<Exponent>{}), DomainError);
}

TEST(MinMonoGens, IdempotentAndOrderIndependent) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Exponent> ms;
    const std::size_t count = 1 + rng.below(8);
    for (std::size_t i = 0; i < count; ++i) {
      Exponent e(4);
      for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(3));
      ms.push_back(e);
    }
    const auto once = min_mono_gens(ms);
    EXPECT_EQ(min_mono_gens(once), once);
    rng.shuffle(ms);
    EXPECT_EQ(min_mono_gens(ms), once);
    for (const auto& m : ms)
      EXPECT_TRUE(std::any_of(once.monomials.begin(), once.monomials.end(),
                              [&](const Exponent& g) { return divides(g, m); }));
  }
}

TEST(InMk, Examples) {
  const Ring r = seven();
  EXPECT_TRUE(in_Mk(min_mono_gens({M(r, "b*f"), M(r, "c*e")}), 2));
  const Ring one = make_ring(Field::rationals(), std::vector<std::string>{"x1"});
  EXPECT_FALSE(in_Mk(MonomialSet{{Exponent{2}}, true}, 2));
  EXPECT_TRUE(in_Mk(min_mono_gens({M(r, "a*c^2*e"), M(r, "a*g"), M(r, "d*g")}), 3));
  EXPECT_FALSE(in_Mk(MonomialSet{{M(r, "b*f"), M(r, "b*d*f")}, false}, 2));
}
