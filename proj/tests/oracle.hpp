#pragma once

// Test-only reference implementations. They share no code with the library:
// dense maps of exponent vectors, plain Buchberger without criteria, and
// Macaulay matrices for degree-wise linear algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "galg/polynomial.hpp"

namespace oracle {

using Exps = std::vector<int>;

inline int deg(const Exps& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// grevlex: total degree, then the smaller exponent in the last differing variable wins
struct Greater {
  bool operator()(const Exps& a, const Exps& b) const {
    const int da = deg(a), db = deg(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct Zp {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return std::uint64_t(a) * b % p; }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, base = a, e = p - 2;
    for (; e; e >>= 1, base = base * base % p)
      if (e & 1) r = r * base % p;
    return static_cast<std::uint32_t>(r);
  }
};

using Poly = std::map<Exps, std::uint32_t, Greater>;

inline void axpy(Poly& f, std::uint32_t c, const Exps& shift, const Poly& g, const Zp& k) {
  for (const auto& [e, a] : g) {
    Exps m = e;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += shift[i];
    auto& slot = f[m];
    slot = k.add(slot, k.mul(c, a));
    if (slot == 0) f.erase(m);
  }
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// full reduction: every term is divided as long as some leading term divides it
inline Poly reduce(Poly f, const std::vector<Poly>& g, const Zp& k) {
  Poly r;
  while (!f.empty()) {
    auto [e, c] = *f.begin();
    bool done = false;
    for (const auto& h : g) {
      const auto& [he, hc] = *h.begin();
      if (!divides(he, e)) continue;
      Exps shift(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) shift[i] = e[i] - he[i];
      axpy(f, k.sub(0, k.mul(c, k.inv(hc))), shift, h, k);
      done = true;
      break;
    }
    if (!done) {
      r[e] = c;
      f.erase(f.begin());
    }
  }
  return r;
}

inline Poly monic(Poly f, const Zp& k) {
  const auto c = k.inv(f.begin()->second);
  for (auto& [e, a] : f) a = k.mul(a, c);
  return f;
}

inline Poly spoly(const Poly& f, const Poly& g, const Zp& k) {
  const auto& fe = f.begin()->first;
  const auto& ge = g.begin()->first;
  Exps sf(fe.size()), sg(fe.size());
  for (std::size_t i = 0; i < fe.size(); ++i) {
    const int l = std::max(fe[i], ge[i]);
    sf[i] = l - fe[i];
    sg[i] = l - ge[i];
  }
  Poly s;
  axpy(s, k.inv(f.begin()->second), sf, f, k);
  axpy(s, k.sub(0, k.inv(g.begin()->second)), sg, g, k);
  return s;
}

// Buchberger with every pair and no criteria, then the reduced basis sorted by leading term
inline std::vector<Poly> reduced_basis(std::vector<Poly> gens, const Zp& k) {
  std::vector<Poly> g;
  for (auto& f : gens)
    if (!f.empty()) g.push_back(monic(f, k));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    auto r = reduce(spoly(g[i], g[j], k), g, k);
    if (r.empty()) continue;
    g.push_back(monic(r, k));
    for (std::size_t a = 0; a + 1 < g.size(); ++a) pairs.emplace_back(a, g.size() - 1);
  }
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = g[j].begin()->first;
      const auto& b = g[i].begin()->first;
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly head;
    head.insert(*minimal[i].begin());
    Poly tail = minimal[i];
    tail.erase(tail.begin());
    auto t = reduce(tail, others, k);
    for (auto& [e, c] : t) head[e] = c;
    out.push_back(head);
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return Greater{}(b.begin()->first, a.begin()->first); });
  return out;
}

inline std::vector<Exps> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exps> out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// rank over Z/p of a list of sparse rows
inline std::size_t rank(std::vector<Poly> rows, const Zp& k) {
  std::vector<Poly> echelon;
  for (auto& r : rows) {
    for (const auto& e : echelon) {
      auto it = r.find(e.begin()->first);
      if (it == r.end()) continue;
      axpy(r, k.sub(0, k.mul(it->second, k.inv(e.begin()->second))), Exps(e.begin()->first.size(), 0), e, k);
    }
    if (r.empty()) continue;
    // pivots must not reappear in earlier rows
    for (auto& e : echelon) {
      auto it = e.find(r.begin()->first);
      if (it != e.end())
        axpy(e, k.sub(0, k.mul(it->second, k.inv(r.begin()->second))), Exps(r.begin()->first.size(), 0), r, k);
    }
    echelon.push_back(r);
  }
  return echelon.size();
}

// all products m * g with m a monomial and deg(m * g) = d, for homogeneous g
inline std::vector<Poly> macaulay_rows(const std::vector<Poly>& gens, std::size_t n, int d) {
  std::vector<Poly> rows;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    const int gd = deg(g.begin()->first);
    if (gd > d) continue;
    for (const auto& m : monomials_of_degree(n, d - gd)) {
      Poly r;
      for (const auto& [e, c] : g) {
        Exps x = e;
        for (std::size_t i = 0; i < n; ++i) x[i] += m[i];
        r[x] = c;
      }
      rows.push_back(r);
    }
  }
  return rows;
}

// dim_K (P/I)_d for homogeneous generators
inline long long hilbert_value(const std::vector<Poly>& gens, std::size_t n, int d, const Zp& k) {
  const auto total = monomials_of_degree(n, d).size();
  return static_cast<long long>(total) - static_cast<long long>(rank(macaulay_rows(gens, n, d), k));
}

// membership of a homogeneous f of degree d in a homogeneous ideal
inline bool in_ideal_homogeneous(const Poly& f, const std::vector<Poly>& gens, std::size_t n, const Zp& k) {
  if (f.empty()) return true;
  const int d = deg(f.begin()->first);
  auto rows = macaulay_rows(gens, n, d);
  const auto r0 = rank(rows, k);
  rows.push_back(f);
  return rank(rows, k) == r0;
}

// dimension of the socle {f in S_d : x_i f in I for all i} of P/I, degree by degree up to `top`
inline long long socle_dimension(const std::vector<Poly>& gens, std::size_t n, int top, const Zp& k) {
  long long total = 0;
  for (int d = 0; d <= top; ++d) {
    // kernel of P_d -> (P_{d+1} / I_{d+1})^n, f -> (x_i f); it contains I_d
    const auto mons = monomials_of_degree(n, d);
    const auto hv = hilbert_value(gens, n, d, k);
    if (hv == 0) continue;
    const auto ideal_rows = macaulay_rows(gens, n, d + 1);
    const std::size_t base_rank = rank(ideal_rows, k);
    // the coordinate index rides along as an extra exponent
    auto tagged = [&](const Poly& f, int idx) {
      Poly t;
      for (const auto& [e, c] : f) {
        Exps x = e;
        x.push_back(idx);
        t[x] = c;
      }
      return t;
    };
    std::vector<Poly> stacked;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& r : ideal_rows) stacked.push_back(tagged(r, static_cast<int>(i)));
    const std::size_t stacked_rank = base_rank * n;
    std::vector<Poly> images = stacked;
    for (const auto& m : mons) {
      Poly img;
      for (std::size_t i = 0; i < n; ++i) {
        Exps x = m;
        x[i] += 1;
        x.push_back(static_cast<int>(i));
        img[x] = 1;
      }
      images.push_back(img);
    }
    const auto map_rank = rank(images, k) - stacked_rank;
    const auto kernel = static_cast<long long>(mons.size()) - static_cast<long long>(map_rank);
    const auto i_d = static_cast<long long>(mons.size()) - hv;
    total += kernel - i_d;
  }
  return total;
}

template <class R>
Poly random_poly(R& rng, std::size_t n, int max_deg, int max_terms, const Zp& k, bool homogeneous) {
  std::uniform_int_distribution<int> dterms(1, max_terms);
  std::uniform_int_distribution<int> ddeg(homogeneous ? max_deg : 0, max_deg);
  std::uniform_int_distribution<std::uint32_t> dc(1, k.p - 1);
  Poly f;
  const int terms = dterms(rng);
  const int hd = ddeg(rng);
  for (int t = 0; t < terms; ++t) {
    const int d = homogeneous ? hd : ddeg(rng);
    auto mons = monomials_of_degree(n, d);
    std::uniform_int_distribution<std::size_t> dm(0, mons.size() - 1);
    auto& slot = f[mons[dm(rng)]];
    slot = k.add(slot, dc(rng));
  }
  for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
  return f;
}

inline Poly mul(const Poly& a, const Poly& b, const Zp& k) {
  Poly r;
  for (const auto& [e, c] : a) axpy(r, c, e, b, k);
  return r;
}

inline Poly add(Poly a, const Poly& b, const Zp& k) {
  axpy(a, 1, Exps(b.empty() ? 0 : b.begin()->first.size(), 0), b, k);
  return a;
}

// conversions to and from the library's representation
inline Poly from_galg(const galg::Polynomial<galg::PrimeField>& f) {
  Poly r;
  for (const auto& t : f.terms()) {
    const auto& x = t.mono.exponents();
    r[Exps(x.begin(), x.end())] = t.coeff;
  }
  return r;
}

inline galg::Polynomial<galg::PrimeField> to_galg(const galg::RingPtr<galg::PrimeField>& ring, const Poly& f) {
  std::vector<galg::Polynomial<galg::PrimeField>::Term> terms;
  for (const auto& [e, c] : f) {
    std::vector<std::uint32_t> x(e.begin(), e.end());
    terms.push_back({galg::Monomial(x), c});
  }
  return galg::Polynomial<galg::PrimeField>(ring, terms);
}

}  // namespace oracle
