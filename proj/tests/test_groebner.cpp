#include <gtest/gtest.h>

#include "galg/budget.hpp"
#include "galg/groebner.hpp"
#include "oracle.hpp"
#include "soundness.hpp"

using namespace galg;

namespace {

using K = PrimeField;
using P = Polynomial<K>;

std::vector<P> polys(const RingPtr<K>& r, std::initializer_list<const char*> texts) {
  std::vector<P> out;
  for (const char* t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

// same ideal: each basis reduces the other's generators to zero
bool same_ideal(const std::vector<P>& a, const std::vector<P>& b) {
  auto ga = groebner_basis(a), gb = groebner_basis(b);
  return ga == gb;
}

}  // namespace

TEST(Groebner, RandomIdealsAgreeWithOracle) {
  auto s = soundness::random_ideals(60, 2024);
  EXPECT_EQ(s.failure, "");
  EXPECT_EQ(s.ideals, 60);
  EXPECT_GT(s.spairs_audited, 0u);
}

TEST(Groebner, TwistedCubicBasis) {
  auto r = make_poly_ring(K(32003), {"a", "b", "c", "d"});
  auto g = groebner_basis(polys(r, {"a*c - b^2", "b*d - c^2", "a*d - b*c"}));
  EXPECT_EQ(g.size(), 3u);
  auto q = QuotientRing<K>::polynomial(r);
  auto gb = ideal_groebner_basis(q, g);
  EXPECT_GT(verify_groebner_basis(gb), 0u);
}

TEST(Groebner, QuotientRingReduction) {
  auto r = make_poly_ring(K(101), {"x", "y"});
  auto s = QuotientRing<K>::make(r, polys(r, {"x^2", "x*y - y^2"}));
  EXPECT_TRUE(s->reduce(parse_polynomial(r, "x^2*y + 3*x^2")).is_zero());
  EXPECT_TRUE(s->homogeneous());
  Reducer<K> red(s);
  EXPECT_TRUE(red.contains(parse_polynomial(r, "x*y^2 - y^3")));
  EXPECT_FALSE(red.contains(parse_polynomial(r, "y^5 + x")));
}

TEST(Groebner, SyzygiesComposeToZeroAndGenerateTheKernel) {
  auto r = make_poly_ring(K(101), {"x", "y", "z"});
  auto s = QuotientRing<K>::polynomial(r);
  std::vector<ModuleVector<K>> cols;
  for (const auto& f : polys(r, {"x*y", "y*z", "x*z"})) cols.push_back({f});
  auto syz = syzygy_module(s, 1, cols, {}, {}, true);
  // the ideal (xy, yz, xz) has two minimal first syzygies
  EXPECT_EQ(syz.gens.size(), 2u);
  for (const auto& v : syz.gens) {
    P sum(r);
    for (std::size_t j = 0; j < 3; ++j) sum = sum + v[j] * cols[j][0];
    EXPECT_TRUE(sum.is_zero());
  }
  // the Koszul-type relation z*e1 - x*e2 lies in their span
  ModuleVector<K> k = {parse_polynomial(r, "z"), parse_polynomial(r, "-x"), P(r)};
  EXPECT_TRUE(lift(s, 3, syz.gens, k).has_value());
}

TEST(Groebner, QuotientsIntersectionsElimination) {
  auto r = make_poly_ring(K(101), {"x", "y", "z"});
  auto s = QuotientRing<K>::polynomial(r);
  EXPECT_TRUE(same_ideal(ideal_quotient(s, polys(r, {"x*y", "x*z"}), parse_polynomial(r, "x")), polys(r, {"y", "z"})));
  EXPECT_TRUE(same_ideal(intersect(s, polys(r, {"x"}), polys(r, {"y"})), polys(r, {"x*y"})));
  // parametrized twisted cubic: t -> (t, t^2, t^3), drop t
  auto r4 = make_poly_ring(K(101), {"t", "x", "y", "z"});
  auto e = eliminate(polys(r4, {"x - t", "y - t^2", "z - t^3"}), {0});
  std::vector<P> expected = polys(r4, {"y - x^2", "z - x*y"});
  EXPECT_TRUE(same_ideal(e, expected));
}

TEST(Groebner, KernelOfMonomialMap) {
  auto s = kernel_of_monomial_map(K(32003), {Monomial{3, 0}, Monomial{2, 1}, Monomial{1, 2}, Monomial{0, 3}},
                                  {"a", "b", "c", "d"});
  EXPECT_TRUE(s->toric_domain());
  EXPECT_TRUE(s->homogeneous());
  EXPECT_TRUE(s->ambient()->has_unit_weights());
  EXPECT_TRUE(same_ideal(s->basis(), polys(s->ambient(), {"a*c - b^2", "b*d - c^2", "a*d - b*c"})));
}

TEST(Groebner, ModuleBasisOverQuotient) {
  auto r = make_poly_ring(K(101), {"x", "y"});
  auto s = QuotientRing<K>::make(r, polys(r, {"x*y"}));
  std::vector<ModuleVector<K>> gens = {{parse_polynomial(r, "x"), parse_polynomial(r, "y")},
                                       {parse_polynomial(r, "y"), P(r)}};
  auto gb = module_groebner_basis(s, 2, gens);
  EXPECT_GT(verify_groebner_basis(gb), 0u);
  Reducer<K> red(gb);
  // x * (x, y) = (x^2, 0) modulo xy
  EXPECT_TRUE(red.contains(ModuleVector<K>{parse_polynomial(r, "x^2"), P(r)}));
  EXPECT_FALSE(red.contains(ModuleVector<K>{parse_polynomial(r, "x"), P(r)}));
}

TEST(Groebner, BasisSizeBudget) {
  auto r = make_poly_ring(K(101), {"x", "y", "z"});
  BudgetScope b(Budget{0, 2});
  EXPECT_THROW(groebner_basis(polys(r, {"x^3 - y*z", "y^3 - x*z", "z^3 - x*y"})), ResourceLimit);
}

TEST(Groebner, LexOrderEliminatesTheFirstVariable) {
  auto r = make_poly_ring(K(101), {"x", "y"}, MonomialOrder{OrderKind::lex, {}});
  auto g = groebner_basis(polys(r, {"x^2 - y", "x*y - 1"}));
  bool univariate = false;
  for (const auto& f : g)
    if (f.leading_monomial()[0] == 0) univariate = true;
  EXPECT_TRUE(univariate);
}
