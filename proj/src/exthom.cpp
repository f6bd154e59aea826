#include "galg/exthom.hpp"

#include "galg/budget.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace galg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

template <Field F>
const ExtEntry<F>* ExtTable<F>::at(int n) const {
  for (const auto& e : entries)
    if (e.n == n) return &e;
  return nullptr;
}

template <Field F>
std::vector<int> ExtTable<F>::nonzero_degrees() const {
  std::vector<int> out;
  for (const auto& e : entries)
    if (!e.is_zero) out.push_back(e.n);
  return out;
}

namespace {

template <Field F>
ModuleVector<F> row_of(const Matrix<F>& m, std::size_t i) {
  ModuleVector<F> r;
  r.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
  return r;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](int x) { return -x; });
  return out;
}

}  // namespace

template <Field F>
PresentedModule<F> ext_module(const FreeResolution<F>& res, bool complete, int n) {
  const auto& s = res.ring;
  const auto& ring = s->ambient();
  const auto un = static_cast<std::size_t>(n);
  if (n < 0) return PresentedModule<F>::free(s, 0);
  if (un >= res.ranks.size() || res.ranks[un] == 0) {
    if (!complete && un >= res.ranks.size()) throw PreconditionError("resolution too short for Ext^" + std::to_string(n));
    auto z = PresentedModule<F>::free(s, 0);
    z.graded = res.graded;
    return z;
  }
  const std::size_t kn = res.ranks[un];
  const auto dual_n = negated(res.degrees[un]);

  // kernel of d_{n+1}^T inside F_n^*
  std::vector<ModuleVector<F>> z;
  std::vector<int> zdeg;
  if (un < res.maps.size()) {
    const auto& d = res.maps[un];
    std::vector<ModuleVector<F>> cols;
    for (std::size_t j = 0; j < kn; ++j) cols.push_back(row_of(d, j));
    auto syz = syzygy_module(s, d.cols(), cols, res.graded ? negated(res.degrees[un + 1]) : std::vector<int>{},
                             res.graded ? dual_n : std::vector<int>(kn, 0), res.graded);
    z = std::move(syz.gens);
    zdeg = res.graded ? std::move(syz.degrees) : std::vector<int>(z.size(), 0);
  } else {
    if (!complete) throw PreconditionError("resolution too short for Ext^" + std::to_string(n));
    for (std::size_t j = 0; j < kn; ++j) z.push_back(unit_vector(ring, kn, j));
    zdeg = res.graded ? dual_n : std::vector<int>(kn, 0);
  }
  PresentedModule<F> out = PresentedModule<F>::free(s, z.size(), zdeg);
  out.graded = res.graded;
  if (z.empty()) return out;

  // relations: c with sum c_i z_i in the image of d_n^T
  std::vector<ModuleVector<F>> cols = z;
  std::vector<int> src = zdeg;
  if (un >= 1) {
    const auto& d = res.maps[un - 1];
    const auto dual_prev = negated(res.degrees[un - 1]);
    for (std::size_t i = 0; i < d.rows; ++i) {
      cols.push_back(row_of(d, i));
      src.push_back(res.graded ? dual_prev[i] : 0);
    }
  }
  auto syz = syzygy_module(s, kn, cols, res.graded ? dual_n : std::vector<int>{}, src, false);
  for (auto& v : syz.gens) {
    v.resize(z.size());
    if (!is_zero_vector(v)) out.relations.push_back(std::move(v));
  }
  return prune(out);
}

template <Field F>
bool is_zero_module(const PresentedModule<F>& m) {
  if (m.generators == 0) return true;
  if (m.relations.empty()) return false;
  auto gb = module_groebner_basis(m.ring, m.generators, m.relations, ModuleOrder::graded(m.generators, m.degrees));
  std::vector<bool> unit(m.generators, false);
  for (const auto& l : gb.leads)
    if (l.mono.is_one()) unit[l.comp] = true;
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

template <Field F>
std::vector<Polynomial<F>> module_annihilator(const PresentedModule<F>& m) {
  const auto& s = m.ring;
  if (m.generators == 0) return {s->one()};
  std::vector<Polynomial<F>> ann;
  for (std::size_t j = 0; j < m.generators; ++j) {
    auto q = module_quotient(s, m.generators, m.relations, unit_vector(s->ambient(), m.generators, j));
    ann = j == 0 ? std::move(q) : intersect(s, ann, q);
  }
  return ideal_groebner_basis(s, ann).polynomials();
}

template <Field F>
ExtEntry<F> describe(const PresentedModule<F>& m, int n, const InvariantOptions& opts) {
  ExtEntry<F> e;
  e.n = n;
  e.module = prune(m);
  e.is_zero = is_zero_module(e.module);
  if (e.is_zero) {
    e.min_gens = 0;
    e.annihilator = {m.ring->one()};
    return e;
  }
  e.min_gens = e.module.generators;
  if (e.module.graded && e.module.ring->homogeneous()) e.hilbert = normalized_hilbert_function(e.module, opts.hilbert_bound);
  if (opts.annihilator) e.annihilator = module_annihilator(e.module);
  return e;
}

template <Field F>
ExtTable<F> ext_modules(const PresentedModule<F>& m, int lo, int hi, const InvariantOptions& opts) {
  const bool graded = m.graded && m.ring->homogeneous() && m.degrees_consistent();
  Resolver<F> r(m, graded);
  r.ensure(static_cast<std::size_t>(std::max(hi + 1, 0)));
  ExtTable<F> t;
  t.lo = lo;
  t.hi = hi;
  t.provenance = "direct";
  for (int n = lo; n <= hi; ++n) t.entries.push_back(describe(ext_module(r.resolution(), r.complete(), n), n, opts));
  return t;
}

// ---------------------------------------------------------- Fitting ideals

template <Field F>
std::vector<Polynomial<F>> fitting_minors(const PresentedModule<F>& m, std::size_t i) {
  const auto& s = m.ring;
  if (m.generators <= i) return {s->one()};
  const std::size_t r = m.generators - i;
  const std::size_t k = m.generators;
  const std::size_t cols = m.relations.size();
  if (cols < r) return {};
  if (k > 63 || cols > 63) throw ResourceLimit("presentation too large for Fitting ideals");
  // binomial(k, r) * binomial(cols, r) bounds the number of minors
  auto binom = [](std::size_t n, std::size_t c) {
    double b = 1;
    for (std::size_t t = 0; t < c; ++t) b = b * static_cast<double>(n - t) / static_cast<double>(t + 1);
    return b;
  };
  if (binom(k, r) * binom(cols, r) > 2e5) throw ResourceLimit("too many minors for a Fitting ideal");

  Reducer<F> red(s);
  std::vector<std::vector<Polynomial<F>>> a(k, std::vector<Polynomial<F>>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t row = 0; row < k; ++row) a[row][c] = red.reduce(m.relations[c][row]);

  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial<F>> memo;
  // determinant of the submatrix on row set R and column set C (|R| = |C|), expanding along the lowest row
  std::function<Polynomial<F>(std::uint64_t, std::uint64_t)> det = [&](std::uint64_t rows, std::uint64_t cs) {
    if (rows == 0) return s->one();
    auto key = std::make_pair(rows, cs);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int row = __builtin_ctzll(rows);
    Polynomial<F> acc = s->zero();
    int sign_pos = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(cs >> c & 1)) continue;
      const auto& entry = a[static_cast<std::size_t>(row)][c];
      if (!entry.is_zero()) {
        auto sub = det(rows & (rows - 1), cs & ~(1ULL << c));
        if (!sub.is_zero()) {
          auto term = red.reduce(entry * sub);
          acc = sign_pos % 2 == 0 ? acc + term : acc - term;
        }
      }
      ++sign_pos;
    }
    memo.emplace(key, acc);
    return acc;
  };

  // all r-subsets of an n-set as bitmasks
  auto subsets = [r](std::size_t n) {
    std::vector<std::uint64_t> out;
    std::function<void(std::size_t, std::uint64_t, std::size_t)> go = [&](std::size_t from, std::uint64_t mask,
                                                                          std::size_t left) {
      if (left == 0) {
        out.push_back(mask);
        return;
      }
      for (std::size_t t = from; t + left <= n; ++t) go(t + 1, mask | (1ULL << t), left - 1);
    };
    go(0, 0, r);
    return out;
  };
  std::vector<Polynomial<F>> minors;
  const auto col_sets = subsets(cols);
  for (auto rows : subsets(k))
    for (auto cs : col_sets) {
      check_deadline();
      auto d = det(rows, cs);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  return minors;
}

template <Field F>
std::vector<Polynomial<F>> fitting_ideal(const PresentedModule<F>& m, std::size_t i) {
  auto minors = fitting_minors(prune(m), i);
  if (minors.empty()) return {};
  return ideal_groebner_basis(m.ring, minors).polynomials();
}

template <Field F>
InvertibilityCertificate<F> is_invertible(const PresentedModule<F>& m) {
  InvertibilityCertificate<F> c;
  const auto& s = m.ring;
  auto p = prune(m);
  if (p.generators == 0) {
    c.fitt0 = {s->one()};
    c.reason = "zero module: Fitt_0 = (1)";
    return c;
  }
  const bool graded = p.graded && s->homogeneous();
  if (graded && p.generators >= 2) {
    // no unit entries after pruning, so every (k-1)-minor lies in the irrelevant ideal
    try {
      c.fitt1 = fitting_minors(p, 1);
    } catch (const ResourceLimit&) {
      c.fitt1.clear();
    }
    c.reason = std::to_string(p.generators) + " minimal generators: Fitt_1 lies in the irrelevant ideal";
    return c;
  }
  c.fitt0 = fitting_minors(p, 0);
  c.fitt1 = fitting_minors(p, 1);
  if (!c.fitt0.empty()) {
    c.reason = "Fitt_0 is nonzero";
    return c;
  }
  std::vector<ModuleVector<F>> gens;
  for (const auto& g : c.fitt1) gens.push_back({g});
  auto coeffs = c.fitt1.empty() ? std::nullopt : lift(s, 1, gens, ModuleVector<F>{s->one()});
  if (!coeffs) {
    c.reason = "1 is not in Fitt_1";
    return c;
  }
  c.one_coefficients = std::move(*coeffs);
  c.verdict = true;
  c.reason = "Fitt_0 = 0 and 1 in Fitt_1";
  return c;
}

template <Field F>
bool check_certificate(const QRing<F>& s, const InvertibilityCertificate<F>& c) {
  Reducer<F> red(s);
  if (!c.verdict) return true;
  for (const auto& g : c.fitt0)
    if (!red.reduce(g).is_zero()) return false;
  if (c.one_coefficients.size() != c.fitt1.size()) return false;
  Polynomial<F> sum = s->zero();
  for (std::size_t i = 0; i < c.fitt1.size(); ++i) sum = sum + c.one_coefficients[i] * c.fitt1[i];
  return red.reduce(sum - s->one()).is_zero();
}

template <Field F>
bool summand_test(const PresentedModule<F>& e, std::string* reason) {
  const auto& s = e.ring;
  auto p = prune(e);
  auto say = [&](const std::string& r) {
    if (reason) *reason = r;
    return false;
  };
  if (p.generators == 0) return true;
  if (p.graded && s->homogeneous()) {
    if (p.generators >= 2) return say("needs " + std::to_string(p.generators) + " generators locally at the irrelevant ideal");
    if (!p.relations.empty()) return say("cyclic with a nonzero proper annihilator (Fitt_0 not idempotent)");
    return true;
  }
  auto f1 = fitting_minors(p, 1);
  std::vector<ModuleVector<F>> gens;
  for (const auto& g : f1) gens.push_back({g});
  if (f1.empty() || !lift(s, 1, gens, ModuleVector<F>{s->one()})) return say("Fitt_1 is not the unit ideal");
  auto f0 = fitting_minors(p, 0);
  if (f0.empty()) return true;
  // J idempotent iff J = J^2
  std::vector<Polynomial<F>> sq;
  Reducer<F> red(s);
  for (std::size_t i = 0; i < f0.size(); ++i)
    for (std::size_t j = i; j < f0.size(); ++j) sq.push_back(red.reduce(f0[i] * f0[j]));
  auto gb = ideal_groebner_basis(s, sq);
  Reducer<F> in_sq(gb);
  for (const auto& g : f0)
    if (!in_sq.contains(g)) return say("Fitt_0 is not idempotent");
  return true;
}

namespace {

template <Field F>
std::vector<Polynomial<F>> ideal_product(const QRing<F>& s, const std::vector<Polynomial<F>>& a,
                                         const std::vector<Polynomial<F>>& b) {
  Reducer<F> red(s);
  std::vector<Polynomial<F>> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto p = red.reduce(x * y);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
  return out;
}

}  // namespace

template <Field F>
GradedInvertibility<F> graded_is_invertible(const ExtTable<F>& table) {
  GradedInvertibility<F> g;
  g.degrees = table.nonzero_degrees();
  if (table.entries.empty()) {
    g.reason = "empty table";
    return g;
  }
  const auto& s = table.entries.front().module.ring;
  for (const auto& e : table.entries) {
    if (e.is_zero) continue;
    std::string why;
    if (!summand_test(e.module, &why)) {
      g.verdict = Verdict::no;
      g.reason = "entry " + std::to_string(e.n) + " cannot be a summand of an invertible module: " + why;
      return g;
    }
  }
  if (g.degrees.empty()) {
    g.verdict = table.complete ? Verdict::no : Verdict::inconclusive;
    g.reason = "all entries vanish in the computed range";
    return g;
  }
  // Fitt_j of a direct sum: Fitt_0 = prod Fitt_0(E^n), Fitt_1 = sum_n Fitt_1(E^n) prod_{m != n} Fitt_0(E^m)
  std::vector<std::vector<Polynomial<F>>> f0, f1;
  for (int n : g.degrees) {
    auto p = prune(table.at(n)->module);
    f0.push_back(fitting_minors(p, 0));
    f1.push_back(fitting_minors(p, 1));
  }
  std::vector<Polynomial<F>> fitt0 = {s->one()};
  for (const auto& f : f0) fitt0 = ideal_product(s, fitt0, f);
  std::vector<Polynomial<F>> fitt1;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    auto term = f1[i];
    for (std::size_t j = 0; j < f0.size(); ++j)
      if (j != i) term = ideal_product(s, term, f0[j]);
    fitt1.insert(fitt1.end(), term.begin(), term.end());
  }
  auto& c = g.certificate;
  c.fitt0 = fitt0;
  c.fitt1 = fitt1;
  if (!fitt0.empty()) {
    g.verdict = Verdict::no;
    c.reason = g.reason = "Fitt_0 of the direct sum is nonzero";
    return g;
  }
  std::vector<ModuleVector<F>> gens;
  for (const auto& x : fitt1) gens.push_back({x});
  auto coeffs = fitt1.empty() ? std::nullopt : lift(s, 1, gens, ModuleVector<F>{s->one()});
  if (!coeffs) {
    g.verdict = Verdict::no;
    c.reason = g.reason = "1 is not in Fitt_1 of the direct sum";
    return g;
  }
  c.one_coefficients = std::move(*coeffs);
  c.verdict = true;
  c.reason = "Fitt_0 = 0 and 1 in Fitt_1 for the direct sum";
  if (!table.complete) {
    g.verdict = Verdict::inconclusive;
    g.reason = "invertible in the computed range, but the range is incomplete";
    return g;
  }
  g.verdict = Verdict::yes;
  g.reason = c.reason;
  return g;
}

template <Field F>
Decomposition<F> graded_module_decomposition(const QRing<F>& s, const ExtTable<F>& table) {
  Decomposition<F> d;
  d.degrees = table.nonzero_degrees();
  const std::size_t q = d.degrees.size();
  if (q == 0) throw PreconditionError("decomposition needs a nonzero table");
  for (int n : d.degrees) {
    const auto* e = table.at(n);
    d.annihilators.push_back(e->annihilator.empty() && !e->is_zero ? module_annihilator(e->module) : e->annihilator);
  }
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<Polynomial<F>> j = {s->one()};
    bool first = true;
    for (std::size_t k = 0; k < q; ++k) {
      if (k == i) continue;
      j = first ? d.annihilators[k] : intersect(s, j, d.annihilators[k]);
      first = false;
    }
    d.summands.push_back(ideal_groebner_basis(s, j).polynomials());
  }
  // e_i from a lift of 1 over the union of the J_i
  std::vector<ModuleVector<F>> gens;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < q; ++i)
    for (const auto& g : d.summands[i]) {
      gens.push_back({g});
      owner.push_back(i);
    }
  auto coeffs = lift(s, 1, gens, ModuleVector<F>{s->one()});
  if (!coeffs) throw InternalError("decomposition certificate failed: the summands are not comaximal");
  Reducer<F> red(s);
  d.idempotents.assign(q, s->zero());
  for (std::size_t t = 0; t < gens.size(); ++t)
    d.idempotents[owner[t]] = red.reduce(d.idempotents[owner[t]] + (*coeffs)[t] * gens[t][0]);

  Polynomial<F> sum = s->zero();
  for (std::size_t i = 0; i < q; ++i) {
    sum = sum + d.idempotents[i];
    if (!red.reduce(d.idempotents[i] * d.idempotents[i] - d.idempotents[i]).is_zero())
      throw InternalError("decomposition certificate failed: e_i is not idempotent");
    for (std::size_t k = i + 1; k < q; ++k) {
      if (!red.reduce(d.idempotents[i] * d.idempotents[k]).is_zero())
        throw InternalError("decomposition certificate failed: e_i e_j != 0");
      for (const auto& a : d.summands[i])
        for (const auto& b : d.summands[k])
          if (!red.reduce(a * b).is_zero()) throw InternalError("decomposition certificate failed: J_i J_j != 0");
    }
  }
  if (!red.reduce(sum - s->one()).is_zero()) throw InternalError("decomposition certificate failed: sum e_i != 1");
  for (std::size_t i = 0; i < q; ++i) d.components.push_back(quotient_by(s, d.annihilators[i]));
  d.certified = true;
  return d;
}

#define GALG_INSTANTIATE(F)                                                                       \
  template struct ExtTable<F>;                                                                    \
  template PresentedModule<F> ext_module(const FreeResolution<F>&, bool, int);                    \
  template ExtEntry<F> describe(const PresentedModule<F>&, int, const InvariantOptions&);         \
  template ExtTable<F> ext_modules(const PresentedModule<F>&, int, int, const InvariantOptions&); \
  template bool is_zero_module(const PresentedModule<F>&);                                        \
  template std::vector<Polynomial<F>> module_annihilator(const PresentedModule<F>&);              \
  template std::vector<Polynomial<F>> fitting_minors(const PresentedModule<F>&, std::size_t);     \
  template std::vector<Polynomial<F>> fitting_ideal(const PresentedModule<F>&, std::size_t);      \
  template InvertibilityCertificate<F> is_invertible(const PresentedModule<F>&);                  \
  template bool check_certificate(const QRing<F>&, const InvertibilityCertificate<F>&);           \
  template bool summand_test(const PresentedModule<F>&, std::string*);                            \
  template GradedInvertibility<F> graded_is_invertible(const ExtTable<F>&);                       \
  template Decomposition<F> graded_module_decomposition(const QRing<F>&, const ExtTable<F>&);

GALG_INSTANTIATE(PrimeField)
GALG_INSTANTIATE(RationalField)

}  // namespace galg
