#include <gtest/gtest.h>

#include "galg/budget.hpp"
#include "galg/cli.hpp"

using namespace galg;

namespace {

using K = PrimeField;

QRing<K> corpus_ring(const std::string& name) {
  auto spec = load_spec("corpus/" + name + ".alg");
  return build_ring(spec, K(static_cast<std::uint32_t>(std::stoul(spec.field.substr(3)))));
}

AnalyzeOptions both_paths() {
  AnalyzeOptions o;
  o.path = "both";
  return o;
}

}  // namespace

TEST(Analyze, CompleteIntersectionIsConcordant) {
  auto a = analyze(corpus_ring("ci-quadric-cubic"), both_paths());
  EXPECT_EQ(a.inv.gorenstein, Verdict::yes);
  EXPECT_EQ(a.bigrade, a.inv.dim);
  ASSERT_TRUE(a.hochschild_invertible);
  EXPECT_EQ(a.hochschild_invertible->verdict, Verdict::yes);
  ASSERT_TRUE(a.factorization);
  ASSERT_EQ(a.factorization->components.size(), 1u);
  EXPECT_EQ(a.factorization->components[0].n, a.inv.dim);
  ASSERT_TRUE(a.probe);
  EXPECT_EQ(a.probe->flag, "CONCORDANT");
  EXPECT_EQ(a.probe->prediction, "gorenstein");
  EXPECT_NE(std::find(a.checks.begin(), a.checks.end(), "path A = path B"), a.checks.end());
}

TEST(Analyze, TwistedCubicIsACounterexampleCandidateForTheLiteralWindow) {
  auto a = analyze(corpus_ring("twisted-cubic-toric"), both_paths());
  ASSERT_TRUE(a.probe);
  const auto& p = *a.probe;
  EXPECT_EQ(p.t, 2);
  EXPECT_EQ(p.literal.lo, 2);
  EXPECT_EQ(p.literal.hi, 3);
  EXPECT_TRUE(p.literal.nonzero.empty());
  EXPECT_EQ(p.theorem.hi, 4);
  EXPECT_EQ(p.theorem.nonzero, std::vector<int>{4});
  EXPECT_EQ(p.theorem.prediction, "not-gorenstein");
  EXPECT_EQ(p.definitive, Verdict::no);
  EXPECT_EQ(p.flag, "COUNTEREXAMPLE CANDIDATE");
}

TEST(Analyze, ArtinianProbeIsDegenerate) {
  AnalyzeOptions o;
  o.base.assume_generically_gorenstein = true;
  auto a = analyze(corpus_ring("fat-point"), o);
  ASSERT_TRUE(a.probe);
  EXPECT_EQ(a.probe->literal.prediction, "none");
  EXPECT_EQ(a.probe->flag, "DEGENERATE");
}

TEST(Analyze, ProbeRefusesWithoutItsHypotheses) {
  AnalyzeOptions o;
  o.require_probe = true;
  EXPECT_THROW(analyze(corpus_ring("two-planes"), o), PreconditionError);
  EXPECT_THROW(analyze(corpus_ring("twisted-cubic"), o), PreconditionError);  // not known to be a domain
  o.require_probe = false;
  auto a = analyze(corpus_ring("twisted-cubic"), o);
  EXPECT_FALSE(a.probe);
  EXPECT_FALSE(a.diagnostics.empty());
}

TEST(Analyze, ProductFactorsIntoAPointAndALine) {
  auto a = analyze(corpus_ring("product-k-kx"));
  EXPECT_FALSE(a.inv.connected);
  ASSERT_TRUE(a.hochschild());
  EXPECT_EQ(a.hochschild()->nonzero_degrees(), (std::vector<int>{0, 1}));
  ASSERT_TRUE(a.factorization);
  EXPECT_TRUE(a.factorization->certified);
  ASSERT_EQ(a.factorization->components.size(), 2u);
  std::vector<std::pair<int, int>> nt;
  for (const auto& c : a.factorization->components) nt.emplace_back(c.n, c.t);
  std::sort(nt.begin(), nt.end());
  EXPECT_EQ(nt, (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
}

TEST(Analyze, DecompositionNeedsAnInvertibleTable) {
  AnalyzeOptions o;
  o.require_factorization = true;
  EXPECT_THROW(analyze(corpus_ring("twisted-cubic"), o), PreconditionError);
}

TEST(Analyze, PathBNeedsCohenMacaulay) {
  AnalyzeOptions o;
  o.path = "B";
  EXPECT_THROW(analyze(corpus_ring("two-planes"), o), PreconditionError);
}

TEST(Analyze, MaxHochschildLeavesTheTableIncomplete) {
  AnalyzeOptions o;
  o.max_hochschild = 1;
  auto a = analyze(corpus_ring("ci-two-quadrics"), o);
  EXPECT_FALSE(a.bigrade.has_value());
  EXPECT_FALSE(a.hochschild()->complete);
  EXPECT_EQ(a.hochschild_invertible->verdict, Verdict::inconclusive);
}

TEST(Analyze, DeadlineYieldsAPartialReport) {
  auto s = corpus_ring("nine-cubics");
  BudgetScope b(Budget{0.3, 0});
  try {
    auto a = analyze(s);
    // the invariants finished; Hochschild ran out of time
    EXPECT_TRUE(a.resource_limit.has_value());
    EXPECT_EQ(a.inv.dim, 3);
  } catch (const ResourceLimit&) {
    SUCCEED();  // the deadline hit during the invariants
  }
}

TEST(Probe, WindowsOfAGorensteinDomain) {
  auto r = invariants(corpus_ring("quadric-cone-toric"));
  auto p = conjecture_probe(r, false);
  EXPECT_EQ(p.flag, "CONCORDANT");
  EXPECT_EQ(p.literal.prediction, "gorenstein");
  EXPECT_EQ(p.theorem.prediction, "gorenstein");
  EXPECT_EQ(p.definitive, Verdict::yes);
}
