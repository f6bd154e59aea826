#include "galg/hochschild.hpp"

namespace galg {

template <Field F>
EnvelopingAlgebra<F> enveloping_algebra(const QRing<F>& s) {
  const auto& a = s->ambient();
  const std::size_t d = a->num_vars();
  auto names = a->names();
  for (std::size_t i = 0; i < d; ++i) names.push_back(a->names()[i] + "'");
  MonomialOrder order = a->order();
  if (!order.weights.empty()) {
    auto w = order.weights;
    order.weights.insert(order.weights.end(), w.begin(), w.end());
  }
  auto ring = make_poly_ring(a->field(), names, order);

  std::vector<std::size_t> to_x(d), to_y(d);
  for (std::size_t i = 0; i < d; ++i) {
    to_x[i] = i;
    to_y[i] = d + i;
  }
  std::vector<Polynomial<F>> gens;
  for (const auto& g : s->basis()) {
    gens.push_back(embed(g, ring, to_x));
    gens.push_back(embed(g, ring, to_y));
  }
  EnvelopingAlgebra<F> e;
  e.base = s;
  e.ring = QuotientRing<F>::make(ring, gens);
  for (std::size_t i = 0; i < d; ++i)
    e.diagonal.push_back(Polynomial<F>::variable(ring, i) - Polynomial<F>::variable(ring, d + i));
  e.diagonal_module = PresentedModule<F>::cyclic(e.ring, e.diagonal);
  e.diagonal_module.graded = s->homogeneous();
  return e;
}

template <Field F>
PresentedModule<F> restrict_to_diagonal(const EnvelopingAlgebra<F>& e, const PresentedModule<F>& m) {
  const auto& target = e.base->ambient();
  const std::size_t d = target->num_vars();
  std::vector<Polynomial<F>> images;
  for (std::size_t i = 0; i < 2 * d; ++i) images.push_back(Polynomial<F>::variable(target, i % d));
  PresentedModule<F> out = PresentedModule<F>::free(e.base, m.generators, m.degrees);
  out.graded = m.graded;
  for (const auto& col : m.relations) {
    ModuleVector<F> v;
    v.reserve(col.size());
    for (const auto& f : col) v.push_back(e.base->reduce(substitute(f, target, images)));
    if (!is_zero_vector(v)) out.relations.push_back(std::move(v));
  }
  return prune(out);
}

template <Field F>
ExtTable<F> hochschild_ext_table(const QRing<F>& s, int n_max, const HochschildOptions& opts) {
  const auto env = enveloping_algebra(s);
  Resolver<F> res(env.diagonal_module, env.diagonal_module.graded);
  ExtTable<F> t;
  t.lo = 0;
  t.hi = -1;
  t.provenance = "path A";
  for (int n = 0; n <= n_max; ++n) {
    res.ensure(static_cast<std::size_t>(n) + 1);
    auto m = restrict_to_diagonal(env, ext_module(res.resolution(), res.complete(), n));
    t.entries.push_back(describe(m, n, opts.ext));
    t.hi = n;
    const auto& e = t.entries.back();
    if (e.is_zero || n == n_max) continue;
    if (opts.stop_at_first_nonzero || (opts.early_exit && !summand_test(e.module))) {
      t.complete = false;
      break;
    }
  }
  return t;
}

template <Field F>
ExtTable<F> hochschild_ext_via_reduction(const InvariantReport<F>& r, int n_max, const InvariantOptions& opts) {
  if (r.cm != Verdict::yes) throw PreconditionError("path B needs a Cohen-Macaulay ring");
  const int b = r.d - r.pd;
  const auto& s = r.ring;
  ExtTable<F> t;
  t.lo = 0;
  t.hi = n_max;
  t.provenance = "path B";
  for (int n = 0; n < std::min(b, n_max + 1); ++n) {
    ExtEntry<F> z;
    z.n = n;
    z.module = PresentedModule<F>::free(s, 0);
    z.module.graded = s->homogeneous();
    z.annihilator = {s->one()};
    t.entries.push_back(std::move(z));
  }
  if (n_max >= b) {
    auto dual = ext_modules(canonical_module(r), 0, n_max - b, opts);
    for (auto& e : dual.entries) {
      e.n += b;
      t.entries.push_back(std::move(e));
    }
  }
  return t;
}

template <Field F>
std::pair<int, std::string> residual_tr_deg(const InvariantReport<F>& r) {
  std::optional<int> cm, dom;
  if (r.cm == Verdict::yes) cm = r.d - r.pd;
  if (r.ring->toric_domain()) dom = r.d - r.grade;
  if (cm && dom && *cm != *dom) throw InternalError("residual transcendence degree: CM and domain values differ");
  if (cm && dom) return {*cm, "cm+domain"};
  if (cm) return {*cm, "cm"};
  if (dom) return {*dom, "domain"};
  throw PreconditionError("residual transcendence degree needs a Cohen-Macaulay ring or a domain");
}

template <Field F>
BigradeReport<F> bigrade(const InvariantReport<F>& r, const std::string& path) {
  BigradeReport<F> b;
  b.lo = 0;
  b.hi = r.d;
  b.path = path;
  if (path == "B") {
    b.table = hochschild_ext_via_reduction(r, r.d);
  } else {
    HochschildOptions o;
    o.stop_at_first_nonzero = true;
    b.table = hochschild_ext_table(r.ring, r.d, o);
  }
  const auto nz = b.table.nonzero_degrees();
  if (!nz.empty()) b.bigrade = nz.front();
  if (!b.bigrade) throw InternalError("no nonzero Hochschild Ext in [0, d]");
  try {
    std::tie(b.t, b.t_method) = residual_tr_deg(r);
  } catch (const PreconditionError&) {
  }
  return b;
}

#define GALG_INSTANTIATE(F)                                                                            \
  template EnvelopingAlgebra<F> enveloping_algebra(const QRing<F>&);                                   \
  template PresentedModule<F> restrict_to_diagonal(const EnvelopingAlgebra<F>&, const PresentedModule<F>&); \
  template ExtTable<F> hochschild_ext_table(const QRing<F>&, int, const HochschildOptions&);           \
  template ExtTable<F> hochschild_ext_via_reduction(const InvariantReport<F>&, int, const InvariantOptions&); \
  template std::pair<int, std::string> residual_tr_deg(const InvariantReport<F>&);                     \
  template BigradeReport<F> bigrade(const InvariantReport<F>&, const std::string&);

GALG_INSTANTIATE(PrimeField)
GALG_INSTANTIATE(RationalField)

}  // namespace galg
