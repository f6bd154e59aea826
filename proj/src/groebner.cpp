#include "galg/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "galg/budget.hpp"
#include "galg/detail/engine.hpp"

namespace galg {

using detail::Engine;

ModuleOrder ModuleOrder::graded(std::size_t rank, std::vector<int> shifts) {
  ModuleOrder o;
  o.shifts = shifts.empty() ? std::vector<int>(rank, 0) : std::move(shifts);
  o.blocks.assign(rank, 0);
  return o;
}

template <Field F>
std::vector<Polynomial<F>> GroebnerBasis<F>::polynomials() const {
  if (rank != 1) throw RingMismatch("polynomials() on a module basis");
  std::vector<Polynomial<F>> out;
  for (const auto& v : elements) out.push_back(v[0]);
  return out;
}

namespace {

template <Field F>
std::unique_ptr<Engine<F>> make_engine(const QRing<F>& s, std::size_t rank, const ModuleOrder& order) {
  const auto& ring = *s->ambient();
  const std::size_t n = ring.num_vars();
  detail::EngineOrder eo;
  if (order.eliminate.empty()) {
    eo = detail::engine_order(ring.order(), n);
  } else {
    if (!s->is_zero_ideal()) throw PreconditionError("elimination orders are only supported over a polynomial ring");
    eo = detail::elimination_order(ring.order(), n, order.eliminate);
  }
  detail::ModuleLayout layout;
  layout.rank = rank;
  layout.shifts = order.shifts;
  layout.shifts.resize(rank, 0);
  layout.blocks = order.blocks;
  layout.blocks.resize(rank, 0);
  auto e = std::make_unique<Engine<F>>(ring.field(), n, std::move(eo), ring.weights(), std::move(layout));
  for (const auto& g : s->basis()) e->add_ring_relation(g);
  return e;
}

template <Field F>
void audit(const GroebnerBasis<F>& gb) {
  if (!AuditScope::active()) return;
  AuditScope::record(verify_groebner_basis(gb));
}

template <Field F>
ModuleVector<F> with_unit(const ModuleVector<F>& v, const RingPtr<F>& ring, std::size_t total, std::size_t pos) {
  ModuleVector<F> w = v;
  w.resize(total, Polynomial<F>(ring));
  w[pos] = Polynomial<F>::constant(ring, 1);
  return w;
}

}  // namespace

template <Field F>
std::optional<long> vector_degree(const ModuleVector<F>& v, const std::vector<int>& shifts) {
  std::optional<long> d;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    auto w = v[c].weighted_degree();
    if (!w) return std::nullopt;
    long dc = *w + (c < shifts.size() ? shifts[c] : 0);
    if (d && *d != dc) return std::nullopt;
    d = dc;
  }
  return d;
}

template <Field F>
GroebnerBasis<F> module_groebner_basis(const QRing<F>& s, std::size_t rank, const std::vector<ModuleVector<F>>& gens,
                                       ModuleOrder order) {
  order.shifts.resize(rank, 0);
  order.blocks.resize(rank, 0);
  auto e = make_engine(s, rank, order);
  for (const auto& g : gens) {
    if (g.size() != rank) throw RingMismatch("vector length differs from module rank");
    e->add_input(g);
  }
  e->compute();
  GroebnerBasis<F> gb{s, rank, order, {}, true, {}};
  for (const auto* p : e->reduced_basis()) {
    gb.elements.push_back(e->export_vector(*p, s->ambient(), 0, rank));
    const std::int32_t* ex = e->table().exps(p->mons.front());
    Monomial m(s->num_vars());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint32_t>(ex[i]);
    gb.leads.push_back({e->lead_comp(*p), std::move(m)});
  }
  audit(gb);
  return gb;
}

template <Field F>
std::vector<Polynomial<F>> groebner_basis(const std::vector<Polynomial<F>>& gens) {
  std::vector<Polynomial<F>> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return {};
  auto s = QuotientRing<F>::polynomial(nz.front().ring());
  std::vector<ModuleVector<F>> vs;
  for (auto& g : nz) vs.push_back({g});
  return module_groebner_basis(s, 1, vs).polynomials();
}

template <Field F>
GroebnerBasis<F> ideal_groebner_basis(const QRing<F>& s, const std::vector<Polynomial<F>>& gens) {
  std::vector<ModuleVector<F>> vs;
  for (const auto& g : gens) vs.push_back({g});
  return module_groebner_basis(s, 1, vs);
}

// ---------------------------------------------------------------- Reducer

template <Field F>
Reducer<F>::Reducer(const GroebnerBasis<F>& gb)
    : ring_(gb.ring->ambient()), rank_(gb.rank), engine_(make_engine(gb.ring, gb.rank, gb.order)) {
  for (const auto& v : gb.elements) engine_->load_basis(v);
}

template <Field F>
Reducer<F>::Reducer(const QRing<F>& s) : ring_(s->ambient()), rank_(1), engine_(make_engine(s, 1, ModuleOrder{})) {}

template <Field F>
Reducer<F>::~Reducer() = default;
template <Field F>
Reducer<F>::Reducer(Reducer&&) noexcept = default;

template <Field F>
ModuleVector<F> Reducer<F>::reduce(const ModuleVector<F>& v) {
  if (v.size() != rank_) throw RingMismatch("vector length differs from module rank");
  auto r = engine_->reduce(engine_->import(v));
  return engine_->export_vector(r, ring_, 0, rank_);
}

template <Field F>
Polynomial<F> Reducer<F>::reduce(const Polynomial<F>& f) {
  return reduce(ModuleVector<F>{f})[0];
}

template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  auto s = QuotientRing<F>::polynomial(f.ring());
  GroebnerBasis<F> gb{s, 1, ModuleOrder::graded(1), {}, false, {}};
  for (const auto& b : basis) {
    if (!same_ring(b.ring(), f.ring())) throw RingMismatch("normal_form: basis over a different ring");
    if (!b.is_zero()) gb.elements.push_back({b});
  }
  Reducer<F> r(gb);
  return r.reduce(f);
}

template <Field F>
ModuleVector<F> normal_form(const ModuleVector<F>& v, const GroebnerBasis<F>& gb) {
  Reducer<F> r(gb);
  return r.reduce(v);
}

// --------------------------------------------------------------- syzygies

template <Field F>
Syzygies<F> syzygy_module(const QRing<F>& s, std::size_t rank, const std::vector<ModuleVector<F>>& vectors,
                          const std::vector<int>& shifts, std::vector<int> source_degrees, bool minimal) {
  const std::size_t m = vectors.size();
  Syzygies<F> out;
  if (m == 0) return out;
  if (source_degrees.empty()) {
    source_degrees.resize(m, 0);
    for (std::size_t j = 0; j < m; ++j)
      if (auto d = vector_degree(vectors[j], shifts)) source_degrees[j] = static_cast<int>(*d);
  }
  ModuleOrder order;
  order.shifts = shifts;
  order.shifts.resize(rank, 0);
  order.shifts.insert(order.shifts.end(), source_degrees.begin(), source_degrees.end());
  order.blocks.assign(rank, 0);
  order.blocks.resize(rank + m, 1);
  auto e = make_engine(s, rank + m, order);
  const auto& ring = s->ambient();
  for (std::size_t j = 0; j < m; ++j) {
    if (vectors[j].size() != rank) throw RingMismatch("vector length differs from module rank");
    e->add_input(with_unit(vectors[j], ring, rank + m, rank + j));
  }
  e->compute();
  std::vector<std::pair<ModuleVector<F>, int>> syz;
  for (const auto* p : e->reduced_basis()) {
    if (e->lead_comp(*p) < rank) continue;
    syz.emplace_back(e->export_vector(*p, ring, rank, m), static_cast<int>(e->degree_of(*p)));
  }
  if (AuditScope::active()) {
    GroebnerBasis<F> gb{s, rank + m, order, {}, true, {}};
    for (const auto* p : e->reduced_basis()) gb.elements.push_back(e->export_vector(*p, ring, 0, rank + m));
    audit(gb);
  }
  if (minimal && !syz.empty()) {
    if (!e->homogeneous()) throw PreconditionError("minimal syzygies need homogeneous input");
    std::vector<ModuleVector<F>> gens;
    for (auto& [v, d] : syz) gens.push_back(v);
    auto keep = minimal_generators(s, m, gens, source_degrees);
    for (auto i : keep) {
      out.gens.push_back(std::move(syz[i].first));
      out.degrees.push_back(syz[i].second);
    }
    return out;
  }
  for (auto& [v, d] : syz) {
    out.gens.push_back(std::move(v));
    out.degrees.push_back(d);
  }
  return out;
}

template <Field F>
std::vector<std::size_t> minimal_generators(const QRing<F>& s, std::size_t rank,
                                            const std::vector<ModuleVector<F>>& vectors,
                                            const std::vector<int>& shifts) {
  auto e = make_engine(s, rank, ModuleOrder::graded(rank, shifts));
  for (const auto& v : vectors) e->add_input(v);
  e->compute();
  if (!e->homogeneous()) throw PreconditionError("minimal generators need homogeneous input");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (e->minimal_inputs()[i]) keep.push_back(i);
  return keep;
}

template <Field F>
std::optional<std::vector<Polynomial<F>>> lift(const QRing<F>& s, std::size_t rank,
                                               const std::vector<ModuleVector<F>>& vectors,
                                               const ModuleVector<F>& target) {
  const std::size_t m = vectors.size();
  const auto& ring = s->ambient();
  ModuleOrder order;
  order.shifts.assign(rank + m, 0);
  order.blocks.assign(rank, 0);
  order.blocks.resize(rank + m, 1);
  auto e = make_engine(s, rank + m, order);
  for (std::size_t j = 0; j < m; ++j) e->add_input(with_unit(vectors[j], ring, rank + m, rank + j));
  e->compute();
  e->reduced_basis();
  ModuleVector<F> t = target;
  t.resize(rank + m, Polynomial<F>(ring));
  auto r = e->reduce(e->import(t));
  if (!r.empty() && e->lead_comp(r) < rank) return std::nullopt;
  auto tag = e->export_vector(r, ring, rank, m);
  std::vector<Polynomial<F>> coeffs;
  for (auto& c : tag) coeffs.push_back(-c);
  return coeffs;
}

// ----------------------------------------------------- quotients and friends

template <Field F>
std::vector<Polynomial<F>> module_quotient(const QRing<F>& s, std::size_t rank, const std::vector<ModuleVector<F>>& u,
                                           const ModuleVector<F>& e) {
  std::vector<ModuleVector<F>> cols;
  cols.push_back(e);
  cols.insert(cols.end(), u.begin(), u.end());
  auto syz = syzygy_module(s, rank, cols, {}, std::vector<int>(cols.size(), 0));
  std::vector<Polynomial<F>> firsts;
  for (const auto& z : syz.gens)
    if (!z[0].is_zero()) firsts.push_back(z[0]);
  return ideal_groebner_basis(s, firsts).polynomials();
}

template <Field F>
std::vector<Polynomial<F>> ideal_quotient(const QRing<F>& s, const std::vector<Polynomial<F>>& ideal,
                                          const Polynomial<F>& f) {
  if (s->reduce(f).is_zero()) return {s->one()};
  std::vector<ModuleVector<F>> u;
  for (const auto& g : ideal) u.push_back({g});
  return module_quotient(s, 1, u, ModuleVector<F>{f});
}

template <Field F>
std::vector<Polynomial<F>> intersect(const QRing<F>& s, const std::vector<Polynomial<F>>& a,
                                     const std::vector<Polynomial<F>>& b) {
  std::vector<ModuleVector<F>> u;
  for (const auto& g : a) u.push_back({g, s->zero()});
  for (const auto& g : b) u.push_back({s->zero(), g});
  return module_quotient(s, 2, u, ModuleVector<F>{s->one(), s->one()});
}

template <Field F>
std::vector<Polynomial<F>> eliminate(const std::vector<Polynomial<F>>& gens, const std::vector<std::size_t>& drop_vars) {
  std::vector<ModuleVector<F>> vs;
  for (const auto& g : gens)
    if (!g.is_zero()) vs.push_back({g});
  if (vs.empty()) return {};
  auto s = QuotientRing<F>::polynomial(vs.front()[0].ring());
  ModuleOrder order = ModuleOrder::graded(1);
  order.eliminate = drop_vars;
  auto gb = module_groebner_basis(s, 1, vs, order);
  std::vector<Polynomial<F>> out;
  for (auto& v : gb.elements) {
    bool clean = true;
    for (const auto& t : v[0].terms())
      for (auto i : drop_vars)
        if (t.mono[i] != 0) clean = false;
    if (clean) out.push_back(v[0]);
  }
  return out;
}

template <Field F>
QRing<F> kernel_of_monomial_map(const F& field, const std::vector<Monomial>& targets,
                                const std::vector<std::string>& new_var_names) {
  const std::size_t r = targets.size();
  if (r == 0 || new_var_names.size() != r) throw InputError("subring needs one variable name per monomial");
  const std::size_t n = targets.front().size();
  std::vector<int> deg(r);
  int g = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (targets[i].size() != n) throw RingMismatch("subring monomials over different variable counts");
    if (targets[i].is_one()) throw InputError("subring generators must be nonconstant");
    deg[i] = static_cast<int>(targets[i].total_degree());
    g = std::gcd(g, deg[i]);
  }
  std::vector<int> w(r);
  for (std::size_t i = 0; i < r; ++i) w[i] = deg[i] / g;
  bool unit = std::all_of(w.begin(), w.end(), [](int x) { return x == 1; });

  // graph ring K[T_1..T_r, a_1..a_n] with T_i weighted by deg(m_i)
  std::vector<std::string> names = new_var_names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("__a" + std::to_string(j));
  std::vector<int> gw = deg;
  gw.resize(r + n, 1);
  auto graph = make_poly_ring(field, names, MonomialOrder{OrderKind::weighted_grevlex, gw});
  std::vector<Polynomial<F>> ideal;
  for (std::size_t i = 0; i < r; ++i) {
    Monomial m(r + n);
    for (std::size_t j = 0; j < n; ++j) m[r + j] = targets[i][j];
    ideal.push_back(Polynomial<F>::variable(graph, i) - Polynomial<F>::term(graph, m, field.one()));
  }
  std::vector<std::size_t> drop(n);
  std::iota(drop.begin(), drop.end(), r);
  auto kernel = eliminate(ideal, drop);

  auto target = make_poly_ring(field, new_var_names,
                               unit ? MonomialOrder{} : MonomialOrder{OrderKind::weighted_grevlex, w});
  std::vector<std::size_t> var_map(r + n, 0);
  std::iota(var_map.begin(), var_map.begin() + static_cast<long>(r), 0);
  std::vector<Polynomial<F>> gens;
  for (const auto& k : kernel) gens.push_back(embed(k, target, var_map));
  return QuotientRing<F>::make(target, std::move(gens), true);
}

// ------------------------------------------------- independent certificate

namespace {

// Plain term-by-term division with a separately written module order.
template <Field F>
class NaiveDivision {
 public:
  using Coeff = typename F::value_type;
  struct Key {
    std::size_t comp;
    Monomial mono;
  };

  NaiveDivision(const GroebnerBasis<F>& gb) : gb_(gb), order_(gb.ring->ambient()->order()) {}

  // >0 when (ca, a) is larger
  int compare(std::size_t ca, const Monomial& a, std::size_t cb, const Monomial& b) const {
    const auto& o = gb_.order;
    int ba = ca < o.blocks.size() ? o.blocks[ca] : 0, bb = cb < o.blocks.size() ? o.blocks[cb] : 0;
    if (ba != bb) return ba < bb ? 1 : -1;
    if (!o.eliminate.empty()) {
      long ea = 0, eb = 0;
      for (auto i : o.eliminate) {
        ea += static_cast<long>(a[i]) * order_.weight(i);
        eb += static_cast<long>(b[i]) * order_.weight(i);
      }
      if (ea != eb) return ea > eb ? 1 : -1;
    }
    if (order_.kind == OrderKind::lex) {
      auto c = compare_monomials(order_, a, b);
      if (c != 0) return c > 0 ? 1 : -1;
    } else {
      long da = a.weighted_degree(order_.weights) + (ca < o.shifts.size() ? o.shifts[ca] : 0);
      long db = b.weighted_degree(order_.weights) + (cb < o.shifts.size() ? o.shifts[cb] : 0);
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  struct Less {
    const NaiveDivision* self;
    bool operator()(const Key& x, const Key& y) const { return self->compare(x.comp, x.mono, y.comp, y.mono) > 0; }
  };
  using Vec = std::map<Key, Coeff, Less>;

  Vec make() const { return Vec(Less{this}); }

  Vec from_vector(const ModuleVector<F>& v) const {
    Vec out = make();
    for (std::size_t c = 0; c < v.size(); ++c)
      for (const auto& t : v[c].terms()) out.emplace(Key{c, t.mono}, t.coeff);
    return out;
  }

  void add_multiple(Vec& acc, const Vec& g, const Monomial& m, std::optional<std::size_t> comp, const Coeff& c) const {
    const F& k = gb_.ring->field();
    for (const auto& [key, coeff] : g) {
      Key nk{comp ? *comp : key.comp, key.mono * m};
      auto prod = k.mul(coeff, c);
      auto it = acc.find(nk);
      if (it == acc.end()) {
        acc.emplace(std::move(nk), prod);
      } else {
        it->second = k.add(it->second, prod);
        if (k.is_zero(it->second)) acc.erase(it);
      }
    }
  }

  // full reduction to a remainder; returns true when the remainder is zero
  bool reduces_to_zero(Vec f, const std::vector<Vec>& basis, const std::vector<Vec>& rel) const {
    const F& k = gb_.ring->field();
    while (!f.empty()) {
      auto it = f.begin();
      const Key lead = it->first;
      const Coeff c = it->second;
      bool done = false;
      for (const auto& g : basis) {
        const auto& [gk, gc] = *g.begin();
        if (gk.comp == lead.comp && gk.mono.divides(lead.mono)) {
          add_multiple(f, g, lead.mono / gk.mono, std::nullopt, k.neg(k.div(c, gc)));
          done = true;
          break;
        }
      }
      if (!done) {
        for (const auto& r : rel) {
          const auto& [rk, rc] = *r.begin();
          if (rk.mono.divides(lead.mono)) {
            add_multiple(f, r, lead.mono / rk.mono, lead.comp, k.neg(k.div(c, rc)));
            done = true;
            break;
          }
        }
      }
      if (!done) return false;  // a remainder term survives: the S-polynomial does not reduce to zero
    }
    return true;
  }

  const GroebnerBasis<F>& gb_;
  MonomialOrder order_;
};

}  // namespace

template <Field F>
std::size_t verify_groebner_basis(const GroebnerBasis<F>& gb) {
  NaiveDivision<F> nd(gb);
  const F& k = gb.ring->field();
  std::vector<typename NaiveDivision<F>::Vec> basis, rel;
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    auto w = nd.from_vector(gb.elements[i]);
    if (w.empty()) throw InternalError("Groebner basis contains a zero element");
    if (i < gb.leads.size()) {
      const auto& key = w.begin()->first;
      if (key.comp != gb.leads[i].comp || !(key.mono == gb.leads[i].mono))
        throw InternalError("Groebner certificate failed: recorded leading term disagrees with the module order");
    }
    basis.push_back(std::move(w));
  }
  for (const auto& g : gb.ring->basis()) {
    ModuleVector<F> v{g};
    rel.push_back(nd.from_vector(v));
  }
  std::size_t checked = 0;
  auto spair = [&](const auto& f, const auto& g, std::optional<std::size_t> g_comp) {
    const auto& [fk, fc] = *f.begin();
    const auto& [gk, gc] = *g.begin();
    Monomial l = fk.mono.lcm(gk.mono);
    auto s = nd.make();
    nd.add_multiple(s, f, l / fk.mono, std::nullopt, k.inv(fc));
    nd.add_multiple(s, g, l / gk.mono, g_comp, k.neg(k.inv(gc)));
    ++checked;
    if (!nd.reduces_to_zero(std::move(s), basis, rel))
      throw InternalError("Groebner certificate failed: an S-polynomial has a nonzero remainder");
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto ci = basis[i].begin()->first.comp;
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (basis[j].begin()->first.comp == ci) spair(basis[i], basis[j], std::nullopt);
    for (const auto& r : rel) spair(basis[i], r, ci);
  }
  return checked;
}

#define GALG_INSTANTIATE(F)                                                                                          \
  template struct GroebnerBasis<F>;                                                                                  \
  template class Reducer<F>;                                                                                         \
  template std::optional<long> vector_degree(const ModuleVector<F>&, const std::vector<int>&);                      \
  template GroebnerBasis<F> module_groebner_basis(const QRing<F>&, std::size_t, const std::vector<ModuleVector<F>>&, \
                                                  ModuleOrder);                                                      \
  template std::vector<Polynomial<F>> groebner_basis(const std::vector<Polynomial<F>>&);                            \
  template GroebnerBasis<F> ideal_groebner_basis(const QRing<F>&, const std::vector<Polynomial<F>>&);               \
  template Polynomial<F> normal_form(const Polynomial<F>&, const std::vector<Polynomial<F>>&);                      \
  template ModuleVector<F> normal_form(const ModuleVector<F>&, const GroebnerBasis<F>&);                            \
  template Syzygies<F> syzygy_module(const QRing<F>&, std::size_t, const std::vector<ModuleVector<F>>&,             \
                                     const std::vector<int>&, std::vector<int>, bool);                              \
  template std::vector<std::size_t> minimal_generators(const QRing<F>&, std::size_t,                                \
                                                       const std::vector<ModuleVector<F>>&, const std::vector<int>&); \
  template std::optional<std::vector<Polynomial<F>>> lift(const QRing<F>&, std::size_t,                              \
                                                          const std::vector<ModuleVector<F>>&, const ModuleVector<F>&); \
  template std::vector<Polynomial<F>> module_quotient(const QRing<F>&, std::size_t,                                 \
                                                      const std::vector<ModuleVector<F>>&, const ModuleVector<F>&); \
  template std::vector<Polynomial<F>> ideal_quotient(const QRing<F>&, const std::vector<Polynomial<F>>&,            \
                                                     const Polynomial<F>&);                                          \
  template std::vector<Polynomial<F>> intersect(const QRing<F>&, const std::vector<Polynomial<F>>&,                 \
                                                const std::vector<Polynomial<F>>&);                                  \
  template std::vector<Polynomial<F>> eliminate(const std::vector<Polynomial<F>>&, const std::vector<std::size_t>&); \
  template QRing<F> kernel_of_monomial_map(const F&, const std::vector<Monomial>&, const std::vector<std::string>&); \
  template std::size_t verify_groebner_basis(const GroebnerBasis<F>&);

GALG_INSTANTIATE(PrimeField)
GALG_INSTANTIATE(RationalField)

}  // namespace galg
