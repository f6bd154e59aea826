#include <gtest/gtest.h>

#include <random>

#include "galg/invariants.hpp"
#include "oracle.hpp"

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

TEST(Invariants, TwistedCubic) {
  auto r = invariants(ring_of({"a", "b", "c", "d"}, {"a*c - b^2", "b*d - c^2", "a*d - b*c"}));
  EXPECT_EQ(r.d, 4);
  EXPECT_EQ(r.dim, 2);
  EXPECT_EQ(r.grade, 2);
  EXPECT_EQ(r.pd, 2);
  EXPECT_EQ(r.depth, 2);
  EXPECT_EQ(r.cm, Verdict::yes);
  EXPECT_EQ(r.gorenstein, Verdict::no);
  EXPECT_FALSE(r.gorenstein_certificate.verdict);
  EXPECT_EQ(r.ext_p.at(2)->min_gens, 2u);
  EXPECT_EQ(r.ext_p.nonzero_degrees(), std::vector<int>{2});
  EXPECT_EQ(min_generators(canonical_module(r)), 2u);
}

TEST(Invariants, TwoPlanesIsNotCohenMacaulay) {
  auto r = invariants(ring_of({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}));
  EXPECT_EQ(r.grade, 2);
  EXPECT_EQ(r.pd, 3);
  EXPECT_EQ(r.depth, 1);
  EXPECT_EQ(r.dim, 2);
  EXPECT_EQ(r.cm, Verdict::no);
  EXPECT_EQ(r.window_nonzero, std::vector<int>{3});
  EXPECT_EQ(r.gorenstein, Verdict::no);
  EXPECT_THROW(canonical_module(r), PreconditionError);
}

TEST(Invariants, CrossingLinesAreGorenstein) {
  auto s = ring_of({"x", "y"}, {"x*y"});
  auto r = invariants(s);
  EXPECT_EQ(r.cm, Verdict::yes);
  EXPECT_EQ(r.gorenstein, Verdict::yes);
  EXPECT_TRUE(r.gorenstein_certificate.verdict);
  EXPECT_TRUE(check_certificate(s, r.gorenstein_certificate));
  EXPECT_EQ(r.betti.size(), 2u);
}

TEST(Invariants, FatPointIsCohenMacaulayButNotGorenstein) {
  auto r = invariants(ring_of({"x", "y"}, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(r.dim, 0);
  EXPECT_EQ(r.cm, Verdict::yes);
  EXPECT_EQ(r.gorenstein, Verdict::no);
  EXPECT_EQ(min_generators(canonical_module(r)), 2u);
}

TEST(Invariants, PolynomialRing) {
  auto r = invariants(ring_of({"x", "y", "z"}, {}));
  EXPECT_EQ(r.grade, 0);
  EXPECT_EQ(r.pd, 0);
  EXPECT_EQ(r.dim, 3);
  EXPECT_EQ(r.gorenstein, Verdict::yes);
}

TEST(Invariants, DisconnectedProductUsesTheWholeTable) {
  auto r = invariants(ring_of({"x", "y"}, {"x*y", "y^2 - y"}));
  EXPECT_FALSE(r.homogeneous);
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.depth.has_value());
  EXPECT_EQ(r.ext_p.nonzero_degrees(), (std::vector<int>{1, 2}));
  EXPECT_EQ(r.cm, Verdict::inconclusive);
  EXPECT_EQ(r.gorenstein, Verdict::yes);
  AnalysisOptions o;
  o.assume_connected = true;
  EXPECT_EQ(invariants(ring_of({"x", "y"}, {"x*y", "y^2 - y"}), o).cm, Verdict::no);
}

TEST(Invariants, RandomCompleteIntersectionsAreGorenstein) {
  const oracle::Zp k{32003};
  std::mt19937 rng(21);
  int checked = 0;
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 3 + rng() % 2;
    std::vector<std::string> names = {"x", "y", "z", "w"};
    names.resize(n);
    auto r = make_poly_ring(K(32003), names);
    const std::size_t c = 1 + rng() % 2;
    std::vector<P> gens;
    for (std::size_t i = 0; i < c; ++i)
      gens.push_back(oracle::to_galg(r, oracle::random_poly(rng, n, 2 + static_cast<int>(rng() % 2), 4, k, true)));
    auto inv = invariants(QuotientRing<K>::make(r, gens));
    if (inv.grade != static_cast<int>(c)) continue;  // not a regular sequence
    ++checked;
    EXPECT_EQ(inv.cm, Verdict::yes);
    EXPECT_EQ(inv.gorenstein, Verdict::yes);
    EXPECT_EQ(inv.ext_p.nonzero_degrees(), std::vector<int>{static_cast<int>(c)});
    EXPECT_EQ(inv.ext_p.at(static_cast<int>(c))->min_gens, 1u);
  }
  EXPECT_GE(checked, 8);
}

TEST(Invariants, PropertiesOnRandomHomogeneousIdeals) {
  const oracle::Zp k{101};
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    auto r = make_poly_ring(K(101), {"x", "y", "z"});
    std::vector<P> gens;
    const int c = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < c; ++i)
      gens.push_back(oracle::to_galg(r, oracle::random_poly(rng, 3, 1 + static_cast<int>(rng() % 2), 2, k, true)));
    auto inv = invariants(QuotientRing<K>::make(r, gens));  // throws on internal disagreement
    EXPECT_EQ(inv.grade + inv.dim, inv.d);
    ASSERT_TRUE(inv.depth.has_value());
    EXPECT_EQ(*inv.depth, inv.d - inv.pd);
    EXPECT_LE(*inv.depth, inv.dim);
    EXPECT_EQ(inv.cm == Verdict::yes, inv.grade == inv.pd);
    if (inv.gorenstein == Verdict::yes) EXPECT_EQ(inv.ext_p.nonzero_degrees(), std::vector<int>{inv.grade});
  }
}

TEST(Invariants, CanonicalModuleIsFaithfulOnArtinianRings) {
  for (auto s : {ring_of({"x"}, {"x^2"}), ring_of({"x", "y"}, {"x^2", "x*y", "y^2"}),
                 ring_of({"x", "y", "z"}, {"x^2", "y^2", "z^2"}), ring_of({"x", "y"}, {"x^3", "y^2"})}) {
    auto r = invariants(s);
    ASSERT_EQ(r.cm, Verdict::yes);
    for (const auto& a : module_annihilator(canonical_module(r))) EXPECT_TRUE(s->reduce(a).is_zero());
  }
}

TEST(Tachikawa, AgreesWithTheGorensteinVerdictOnDomains) {
  auto cubic = invariants(toric({Monomial{3, 0}, Monomial{2, 1}, Monomial{1, 2}, Monomial{0, 3}}));
  auto t = tachikawa_test(cubic, false);
  EXPECT_EQ(t.verdict, Verdict::no);
  // Ext^1_S(C, S) vanishes, Ext^2_S(C, S) does not
  EXPECT_TRUE(t.table.at(1)->is_zero);
  EXPECT_FALSE(t.table.at(2)->is_zero);
  auto cone = invariants(toric({Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
  EXPECT_EQ(tachikawa_test(cone, false).verdict, Verdict::yes);
  EXPECT_THROW(tachikawa_test(invariants(ring_of({"x", "y"}, {"x^2", "x*y", "y^2"})), false), PreconditionError);
}
