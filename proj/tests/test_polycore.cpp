#include <gtest/gtest.h>

#include <random>

#include "galg/polynomial.hpp"
#include "oracle.hpp"

using namespace galg;

namespace {

using P = Polynomial<PrimeField>;

P random_poly(std::mt19937& rng, const RingPtr<PrimeField>& r, int max_deg, int terms) {
  const oracle::Zp k{r->field().characteristic()};
  return oracle::to_galg(r, oracle::random_poly(rng, r->num_vars(), max_deg, terms, k, false));
}

}  // namespace

TEST(Field, PrimalityAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d)
      if (n % d == 0) prime = false;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
  EXPECT_TRUE(is_prime(32003));
  EXPECT_TRUE(is_prime(2147483647));
}

TEST(Field, InversesModP) {
  PrimeField k(101);
  for (std::uint32_t a = 1; a < 101; ++a) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
  EXPECT_THROW(k.inv(0), std::domain_error);
  EXPECT_EQ(k.from_string("1/2"), k.inv(2));
  EXPECT_EQ(k.to_string(100), "-1");
  EXPECT_THROW(PrimeField(100), InputError);
}

TEST(Field, Rationals) {
  RationalField q;
  EXPECT_EQ(q.from_string("-6/4"), mpq_class(-3, 2));
  EXPECT_EQ(q.mul(q.inv(q.from_int(7)), q.from_int(7)), q.one());
  EXPECT_THROW(q.inv(q.zero()), std::domain_error);
}

TEST(Monomial, GrevlexMatchesOracle) {
  MonomialOrder o;
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  for (int i = 0; i < 2000; ++i) {
    Monomial a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)};
    oracle::Exps x(a.exponents().begin(), a.exponents().end()), y(b.exponents().begin(), b.exponents().end());
    const bool greater = oracle::Greater{}(x, y);
    EXPECT_EQ(compare_monomials(o, a, b) == std::strong_ordering::greater, greater);
  }
}

TEST(Monomial, LexAndWeightedOrders) {
  MonomialOrder lex{OrderKind::lex, {}};
  EXPECT_EQ(compare_monomials(lex, Monomial{1, 0, 0}, Monomial{0, 5, 5}), std::strong_ordering::greater);
  MonomialOrder w{OrderKind::weighted_grevlex, {1, 1, 2}};
  EXPECT_EQ(compare_monomials(w, Monomial{0, 0, 1}, Monomial{0, 1, 0}), std::strong_ordering::greater);
  EXPECT_EQ(compare_monomials(w, Monomial{2, 0, 0}, Monomial{0, 0, 1}), std::strong_ordering::greater);
  EXPECT_THROW(compare_monomials(MonomialOrder{}, Monomial{1}, Monomial{1, 0}), RingMismatch);
}

TEST(Polynomial, RingAxiomsOnRandomElements) {
  auto r = make_poly_ring(PrimeField(101), {"x", "y", "z"});
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, r, 3, 4), b = random_poly(rng, r, 3, 4), c = random_poly(rng, r, 2, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a + (-a), P(r));
  }
}

TEST(Polynomial, MultiplicationMatchesOracle) {
  auto r = make_poly_ring(PrimeField(101), {"x", "y", "z"});
  const oracle::Zp k{101};
  std::mt19937 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto a = oracle::random_poly(rng, 3, 3, 5, k, false), b = oracle::random_poly(rng, 3, 3, 5, k, false);
    EXPECT_EQ(oracle::from_galg(oracle::to_galg(r, a) * oracle::to_galg(r, b)), oracle::mul(a, b, k));
  }
}

TEST(Polynomial, ParseAndPrintRoundTrip) {
  auto r = make_poly_ring(PrimeField(32003), {"x", "y", "z"});
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, r, 4, 6);
    EXPECT_EQ(parse_polynomial(r, a.to_string()), a) << a.to_string();
  }
  EXPECT_EQ(parse_polynomial(r, "(x+1)^2 - 2*x"), parse_polynomial(r, "x^2 + 1"));
  EXPECT_EQ(parse_polynomial(r, "x/2 + x/2"), P::variable(r, 0));
}

TEST(Polynomial, ParseErrorsCarryAColumn) {
  auto r = make_poly_ring(PrimeField(101), {"x", "y"});
  try {
    parse_polynomial(r, "x + w");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("5"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_polynomial(r, "x +"), InputError);
  EXPECT_THROW(parse_polynomial(r, "x^"), InputError);
  EXPECT_THROW(parse_polynomial(r, "(x"), InputError);
}

TEST(Polynomial, DegreesAndWeights) {
  auto r = make_poly_ring(PrimeField(101), {"x", "y", "z"}, MonomialOrder{OrderKind::weighted_grevlex, {1, 1, 2}});
  EXPECT_EQ(parse_polynomial(r, "x*z - y^3").weighted_degree(), 3);
  EXPECT_FALSE(parse_polynomial(r, "x*z - y^2").weighted_degree().has_value());
  EXPECT_EQ(parse_polynomial(r, "x*z - y^2").degree(), 3);
}

TEST(Polynomial, MixingRingsThrows) {
  auto r1 = make_poly_ring(PrimeField(101), {"x"});
  auto r2 = make_poly_ring(PrimeField(103), {"x"});
  EXPECT_THROW(P::variable(r1, 0) + P::variable(r2, 0), RingMismatch);
}

TEST(Polynomial, SubstituteAndEmbed) {
  auto r = make_poly_ring(PrimeField(101), {"x", "y"});
  auto t = make_poly_ring(PrimeField(101), {"a", "b", "c"});
  auto f = parse_polynomial(r, "x^2 - y");
  EXPECT_EQ(embed(f, t, {2, 0}), parse_polynomial(t, "c^2 - a"));
  EXPECT_EQ(substitute(f, t, {parse_polynomial(t, "a+b"), parse_polynomial(t, "c")}),
            parse_polynomial(t, "a^2 + 2*a*b + b^2 - c"));
}
