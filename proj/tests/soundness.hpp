#pragma once

// Random-ideal comparison of the engine against the test oracles, shared by
// the unit tests and the acceptance binary.

#include <random>
#include <sstream>
#include <string>

#include "galg/budget.hpp"
#include "galg/groebner.hpp"
#include "oracle.hpp"

namespace soundness {

struct Summary {
  int ideals = 0;
  int nf_checks = 0;
  int membership_checks = 0;
  int linear_algebra_checks = 0;
  std::size_t spairs_audited = 0;
  std::string failure;  // empty when everything agreed
};

inline std::vector<oracle::Poly> canonical(std::vector<oracle::Poly> b) {
  std::sort(b.begin(), b.end(), [](const oracle::Poly& x, const oracle::Poly& y) {
    return oracle::Greater{}(y.begin()->first, x.begin()->first);
  });
  return b;
}

inline std::string show(const oracle::Poly& f) {
  std::ostringstream out;
  for (const auto& [e, c] : f) {
    out << " + " << c << "*[";
    for (int v : e) out << v << ",";
    out << "]";
  }
  return out.str();
}

// 100 random ideals in at most 3 variables with generators of degree at most 3 over GF(101)
inline Summary random_ideals(int count, unsigned seed) {
  using namespace galg;
  const oracle::Zp k{101};
  std::mt19937 rng(seed);
  Summary s;
  AuditScope audit;
  const std::size_t before = AuditScope::spairs_checked();
  for (int t = 0; t < count && s.failure.empty(); ++t) {
    const std::size_t n = 1 + rng() % 3;
    const bool homogeneous = t % 2 == 0;
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(n);
    auto ring = make_poly_ring(PrimeField(101), names);
    const int gens_count = 1 + static_cast<int>(rng() % 3);
    std::vector<oracle::Poly> og;
    std::vector<Polynomial<PrimeField>> gg;
    for (int i = 0; i < gens_count; ++i) {
      const int d = 1 + static_cast<int>(rng() % 3);
      auto f = oracle::random_poly(rng, n, d, 4, k, homogeneous);
      if (f.empty()) continue;
      og.push_back(f);
      gg.push_back(oracle::to_galg(ring, f));
    }
    ++s.ideals;
    const auto tag = "ideal " + std::to_string(t) + ": ";

    const auto expected = oracle::reduced_basis(og, k);
    const auto got_basis = groebner_basis(gg);
    std::vector<oracle::Poly> got;
    for (const auto& g : got_basis) got.push_back(oracle::from_galg(g));
    if (canonical(got) != canonical(expected)) {
      s.failure = tag + "reduced Groebner basis differs from the oracle";
      break;
    }
    auto gb = ideal_groebner_basis(QuotientRing<PrimeField>::polynomial(ring), gg);
    verify_groebner_basis(gb);

    for (int i = 0; i < 5; ++i) {
      auto f = oracle::random_poly(rng, n, 4, 5, k, false);
      const auto want = oracle::reduce(f, expected, k);
      const auto have = oracle::from_galg(normal_form(oracle::to_galg(ring, f), got_basis));
      ++s.nf_checks;
      if (want != have) {
        s.failure = tag + "normal form differs:" + show(want) + " vs" + show(have);
        break;
      }
    }
    for (int i = 0; i < 3 && s.failure.empty(); ++i) {
      oracle::Poly f;
      for (const auto& g : og) f = oracle::add(f, oracle::mul(oracle::random_poly(rng, n, 2, 3, k, homogeneous), g, k), k);
      ++s.membership_checks;
      if (!normal_form(oracle::to_galg(ring, f), got_basis).is_zero()) s.failure = tag + "member not reduced to zero";
    }
    if (homogeneous) {
      for (int i = 0; i < 4 && s.failure.empty(); ++i) {
        // mix a member and a random form of the same degree, so both answers occur
        const int d = 2 + static_cast<int>(rng() % 3);
        oracle::Poly f;
        for (const auto& g : og) {
          const int gd = oracle::deg(g.begin()->first);
          if (gd <= d) f = oracle::add(f, oracle::mul(oracle::random_poly(rng, n, d - gd, 3, k, true), g, k), k);
        }
        if (i % 2) f = oracle::add(f, oracle::random_poly(rng, n, d, 1, k, true), k);
        if (f.empty()) continue;
        ++s.linear_algebra_checks;
        const bool want = oracle::in_ideal_homogeneous(f, og, n, k);
        const bool have = normal_form(oracle::to_galg(ring, f), got_basis).is_zero();
        if (want != have) s.failure = tag + "membership differs from the Macaulay matrix";
      }
    }
  }
  s.spairs_audited = AuditScope::spairs_checked() - before;
  return s;
}

}  // namespace soundness
