#include <gtest/gtest.h>

#include "galg/criteria.hpp"

using namespace galg;

namespace {

using K = PrimeField;
using P = Polynomial<K>;

QRing<K> ring_of(std::vector<std::string> vars, std::initializer_list<const char*> ideal, std::uint32_t p = 32003) {
  auto r = make_poly_ring(K(p), std::move(vars));
  std::vector<P> gens;
  for (const char* t : ideal) gens.push_back(parse_polynomial(r, t));
  return QuotientRing<K>::make(r, gens);
}

QRing<K> toric(std::vector<Monomial> monos) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < monos.size(); ++i) names.push_back("t" + std::to_string(i + 1));
  return kernel_of_monomial_map(K(32003), monos, names);
}

}  // namespace

TEST(Enveloping, DualNumbersHomIsGeneratedByTheSum) {
  auto s = ring_of({"x"}, {"x^2"});
  auto e = enveloping_algebra(s);
  EXPECT_EQ(e.ring->num_vars(), 2u);
  EXPECT_EQ(e.ring->ambient()->names()[1], "x'");
  // Hom_{S^e}(S, S^e) = Ann(x - x') = (x + x')
  auto hom = ideal_quotient(e.ring, {}, e.diagonal[0]);
  auto sum = parse_polynomial(e.ring->ambient(), "x + x'");
  EXPECT_EQ(ideal_groebner_basis(e.ring, hom).polynomials(), ideal_groebner_basis(e.ring, {sum}).polynomials());
  // and path A sees it as a copy of S
  auto t = hochschild_ext_table(s, 1);
  const auto& e0 = *t.at(0);
  EXPECT_FALSE(e0.is_zero);
  EXPECT_EQ(e0.min_gens, 1u);
  EXPECT_EQ(e0.hilbert, (std::vector<long long>{1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(e0.annihilator.empty());
  EXPECT_TRUE(t.at(1)->is_zero);
}

TEST(Enveloping, RestrictionToTheDiagonal) {
  auto s = ring_of({"x", "y"}, {"x*y"});
  auto e = enveloping_algebra(s);
  // S^e / (x - x', y - y') restricts to S itself
  auto m = restrict_to_diagonal(e, e.diagonal_module);
  EXPECT_EQ(m.generators, 1u);
  EXPECT_TRUE(m.relations.empty());
}

TEST(Hochschild, PathsAgreeOnCohenMacaulayRings) {
  for (auto s : {ring_of({"x", "y"}, {"x*y"}), ring_of({"x", "y"}, {"x^2", "x*y", "y^2"}),
                 ring_of({"x", "y", "z"}, {"x^2 + y^2 + z^2"}), ring_of({"x", "y"}, {"x^2", "y^3"}),
                 ring_of({"a", "b", "c", "d"}, {"a*c - b^2", "b*d - c^2", "a*d - b*c"})}) {
    auto r = invariants(s);
    ASSERT_EQ(r.cm, Verdict::yes);
    auto a = hochschild_ext_table(s, r.d);
    auto b = hochschild_ext_via_reduction(r, r.d);
    EXPECT_EQ(compare_tables(a, b), std::vector<std::string>{});
    EXPECT_EQ(a.nonzero_degrees(), b.nonzero_degrees());
  }
}

TEST(Hochschild, TwistedCubicTable) {
  auto s = toric({Monomial{3, 0}, Monomial{2, 1}, Monomial{1, 2}, Monomial{0, 3}});
  auto t = hochschild_ext_table(s, 4);
  EXPECT_EQ(t.nonzero_degrees(), (std::vector<int>{2, 4}));
  EXPECT_EQ(t.at(2)->min_gens, 3u);
  EXPECT_EQ(std::vector<long long>(t.at(2)->hilbert.begin(), t.at(2)->hilbert.begin() + 3),
            (std::vector<long long>{3, 6, 9}));
  EXPECT_TRUE(t.at(3)->is_zero);
  EXPECT_EQ(t.at(4)->hilbert[0], 1);
  EXPECT_EQ(t.at(4)->hilbert[1], 0);
}

TEST(Hochschild, Bigrade) {
  auto planes = invariants(ring_of({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}));
  auto b = bigrade(planes);
  EXPECT_EQ(b.bigrade, 2);
  EXPECT_FALSE(b.t.has_value());  // neither CM nor presented as a domain
  auto ci = invariants(ring_of({"x", "y", "z"}, {"x^3 + y^3 + z^3"}));
  EXPECT_EQ(bigrade(ci).bigrade, 2);
  EXPECT_EQ(bigrade(ci, "B").bigrade, 2);
  EXPECT_EQ(bigrade(ci).t, 2);
}

TEST(Hochschild, EarlyExitStopsAtANonSummand) {
  auto s = ring_of({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"});
  HochschildOptions o;
  o.early_exit = true;
  auto t = hochschild_ext_table(s, 4, o);
  EXPECT_FALSE(t.complete);
  EXPECT_EQ(t.hi, 2);
}

TEST(Hochschild, ResidualTranscendenceDegree) {
  auto cubic = invariants(toric({Monomial{3, 0}, Monomial{2, 1}, Monomial{1, 2}, Monomial{0, 3}}));
  auto [t, how] = residual_tr_deg(cubic);
  EXPECT_EQ(t, 2);
  EXPECT_EQ(how, "cm+domain");
  auto point = invariants(ring_of({"x", "y"}, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(residual_tr_deg(point).first, 0);
  EXPECT_THROW(residual_tr_deg(invariants(ring_of({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}))),
               PreconditionError);
}
