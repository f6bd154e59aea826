#include "galg/criteria.hpp"

#include <algorithm>

namespace galg {

namespace {

ProbeWindow window_of(const std::vector<int>& nonzero, int lo, int hi) {
  ProbeWindow w;
  w.lo = lo;
  w.hi = hi;
  for (int n : nonzero)
    if (n > lo && n <= hi) w.nonzero.push_back(n);
  if (hi <= lo)
    w.prediction = "none";
  else
    w.prediction = w.nonzero.empty() ? "gorenstein" : "not-gorenstein";
  return w;
}

template <Field F>
std::string poly_list(const std::vector<Polynomial<F>>& ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out + ")";
}

}  // namespace

template <Field F>
std::vector<std::string> compare_tables(const ExtTable<F>& a, const ExtTable<F>& b) {
  std::vector<std::string> diffs;
  for (const auto& x : a.entries) {
    const auto* y = b.at(x.n);
    if (!y) continue;
    const std::string at = "n=" + std::to_string(x.n) + ": ";
    if (x.is_zero != y->is_zero) diffs.push_back(at + "is_zero differs");
    if (x.min_gens != y->min_gens)
      diffs.push_back(at + "min_gens " + std::to_string(x.min_gens) + " vs " + std::to_string(y->min_gens));
    if (x.hilbert != y->hilbert) diffs.push_back(at + "Hilbert functions differ");
    if (poly_list(x.annihilator) != poly_list(y->annihilator))
      diffs.push_back(at + "annihilators " + poly_list(x.annihilator) + " vs " + poly_list(y->annihilator));
  }
  return diffs;
}

template <Field F>
Factorization<F> gorenstein_factorization(const QRing<F>& s, const ExtTable<F>& table, const AnalysisOptions& opts) {
  auto dec = graded_module_decomposition(s, table);
  Factorization<F> f;
  const std::size_t q = dec.degrees.size();
  for (std::size_t i = 0; i < q; ++i) {
    FactorComponent<F> c;
    c.ideal = dec.annihilators[i];
    c.idempotent = dec.idempotents[i];
    c.n = dec.degrees[i];
    const bool whole = c.ideal.empty();
    c.ring = whole ? s : dec.components[i];
    auto inv = invariants(c.ring, opts);
    if (whole && table.complete) {
      c.table = table;
    } else {
      HochschildOptions o;
      o.ext = opts.ext;
      c.table = hochschild_ext_table(c.ring, inv.d, o);
    }
    const auto nz = c.table.nonzero_degrees();
    if (nz != std::vector<int>{c.n})
      throw InternalError("component " + std::to_string(i) + ": Hochschild table not concentrated in degree " +
                          std::to_string(c.n));
    std::tie(c.t, c.t_method) = residual_tr_deg(inv);
    if (c.t != c.n)
      throw InternalError("component " + std::to_string(i) + ": residual transcendence degree " + std::to_string(c.t) +
                          " differs from its Hochschild degree " + std::to_string(c.n));
    f.components.push_back(std::move(c));
  }
  f.certified = dec.certified;
  return f;
}

template <Field F>
ProbeRecord<F> conjecture_probe(const InvariantReport<F>& r, bool generically_gorenstein) {
  if (r.cm != Verdict::yes) throw PreconditionError("conjecture probe needs a Cohen-Macaulay ring");
  if (!r.connected) throw PreconditionError("conjecture probe needs Spec S connected (assert it for inhomogeneous input)");
  const bool toric = r.ring->toric_domain();
  // a Gorenstein ring is generically Gorenstein, so a positive verdict settles the hypothesis
  if (!generically_gorenstein && !toric && r.gorenstein != Verdict::yes)
    throw PreconditionError("conjecture probe needs generic Gorensteinness (assert it or use a toric presentation)");
  ProbeRecord<F> p;
  std::tie(p.t, p.t_method) = residual_tr_deg(r);
  p.table = hochschild_ext_via_reduction(r, p.t + r.dim);
  const auto nz = p.table.nonzero_degrees();
  p.literal = window_of(nz, p.t, p.t + std::min(r.dim, 1));
  p.theorem = window_of(nz, p.t, p.t + r.dim);
  p.definitive = r.gorenstein;
  p.prediction = p.literal.prediction;

  if (p.theorem.prediction == "not-gorenstein" && p.definitive == Verdict::yes)
    throw InternalError("Gorenstein ring with Hochschild Ext outside degree t");
  if (p.literal.prediction == "none")
    p.flag = "DEGENERATE";
  else if (p.literal.prediction == "gorenstein" && p.definitive == Verdict::no)
    p.flag = "COUNTEREXAMPLE CANDIDATE";
  else
    p.flag = "CONCORDANT";
  if (p.theorem.prediction == "gorenstein" && p.definitive == Verdict::no) {
    if (toric) throw InternalError("full-window vanishing on a non-Gorenstein domain");
    p.flag = "ASSERTION VIOLATED";
  }
  return p;
}

template <Field F>
void hochschild_stage(const QRing<F>& s, const AnalyzeOptions& opts, AnalysisReport<F>& a) {
  const auto& r = a.inv;
  const int n_max = opts.max_hochschild.value_or(r.d);
  bool want_a = opts.path != "B";
  bool want_b = opts.path != "A";
  if (want_b && r.cm != Verdict::yes) {
    if (opts.path == "B") throw PreconditionError("path B needs a Cohen-Macaulay ring");
    a.diagnostics.push_back("path B skipped: ring not known to be Cohen-Macaulay");
    want_b = false;
  }
  if (want_a) {
    HochschildOptions o;
    o.ext = opts.base.ext;
    o.early_exit = !want_b;
    o.stop_at_first_nonzero = opts.stop_at_first_nonzero;
    a.path_a = hochschild_ext_table(s, n_max, o);
    if (n_max < r.d) a.path_a->complete = false;
  }
  if (want_b) {
    a.path_b = hochschild_ext_via_reduction(r, n_max, opts.base.ext);
    if (n_max < r.d) a.path_b->complete = false;
  }
  if (a.path_a && a.path_b) {
    auto diffs = compare_tables(*a.path_a, *a.path_b);
    if (!diffs.empty()) throw InternalError("path A and path B disagree: " + diffs.front());
    a.checks.push_back("path A = path B");
  }
  const auto& table = *a.hochschild();
  const auto nz = table.nonzero_degrees();
  if (!nz.empty()) {
    a.bigrade = nz.front();
  } else if (n_max >= r.d) {
    throw InternalError("no nonzero Hochschild Ext in [0, d]");
  } else {
    a.diagnostics.push_back("bigrade not reached within --max-hochschild");
  }

  if (a.bigrade) {
    const int b = *a.bigrade;
    if (b < r.d - r.pd || b > r.d) throw InternalError("bigrade outside [d - pd, d]");
    a.checks.push_back("d - pd <= bigrade <= d");
    if (r.depth) {
      if (b < *r.depth || b > r.dim) throw InternalError("bigrade outside [depth, dim]");
      a.checks.push_back("depth <= bigrade <= dim");
    }
    if (r.cm == Verdict::yes && r.homogeneous) {
      if (b != r.dim) throw InternalError("CM graded ring with bigrade != dim");
      a.checks.push_back("CM graded: bigrade = dim");
    }
  }

  a.hochschild_invertible = graded_is_invertible(table);
  const auto hv = a.hochschild_invertible->verdict;
  if (hv != Verdict::inconclusive && r.gorenstein != Verdict::inconclusive) {
    if (hv != r.gorenstein) throw InternalError("Gorenstein test disagrees with Hochschild invertibility");
    a.checks.push_back("Gorenstein test = Hochschild invertibility");
  }
  if (hv == Verdict::yes && !check_certificate(s, a.hochschild_invertible->certificate))
    throw InternalError("Hochschild invertibility certificate does not verify");
  if (r.gorenstein == Verdict::yes && r.connected && a.t) {
    // only the computed part of the table can be checked
    const auto expected = *a.t <= table.hi ? std::vector<int>{*a.t} : std::vector<int>{};
    if (nz != expected) throw InternalError("Gorenstein but Hochschild Ext not concentrated in degree t");
    a.checks.push_back("Gorenstein: Hochschild Ext concentrated in degree t");
  }

  if (opts.factorization && hv == Verdict::yes) {
    a.factorization = gorenstein_factorization(s, table, opts.base);
    if (r.connected && a.factorization->components.size() != 1)
      throw InternalError("connected ring with several factors");
    a.checks.push_back("factors concentrated in degree n_i = t_i");
  } else if (opts.require_factorization) {
    throw PreconditionError(std::string("factorization needs an invertible Hochschild table (verdict ") +
                            verdict_name(hv) + ")");
  }
}

template <Field F>
AnalysisReport<F> analyze(const QRing<F>& s, const AnalyzeOptions& opts) {
  AnalysisReport<F> a;
  a.inv = invariants(s, opts.base);
  const auto& r = a.inv;
  a.diagnostics = r.diagnostics;
  a.path = opts.path;
  a.checks.push_back("grade = d - dim = first nonzero Ext_P");
  a.checks.push_back("pd = last nonzero Ext_P");
  a.checks.push_back("CM window agrees with grade = pd");
  try {
    std::tie(a.t, a.t_method) = residual_tr_deg(r);
  } catch (const PreconditionError&) {
  }
  try {
    if (opts.hochschild) hochschild_stage(s, opts, a);
  } catch (const ResourceLimit& e) {
    a.resource_limit = e.what();
    a.diagnostics.push_back(std::string("resource limit: ") + e.what());
    return a;
  }
  if (opts.probe || opts.require_probe) {
    try {
      a.probe = conjecture_probe(r, opts.base.assume_generically_gorenstein);
      a.checks.push_back("probe: full-window vanishing implies Gorenstein");
    } catch (const ResourceLimit& e) {
      a.resource_limit = e.what();
      a.diagnostics.push_back(std::string("resource limit: ") + e.what());
    } catch (const PreconditionError& e) {
      if (opts.require_probe) throw;
      a.diagnostics.push_back(std::string("probe skipped: ") + e.what());
    }
  }
  return a;
}

#define GALG_INSTANTIATE(F)                                                                              \
  template std::vector<std::string> compare_tables(const ExtTable<F>&, const ExtTable<F>&);              \
  template Factorization<F> gorenstein_factorization(const QRing<F>&, const ExtTable<F>&,                \
                                                     const AnalysisOptions&);                            \
  template ProbeRecord<F> conjecture_probe(const InvariantReport<F>&, bool);                             \
  template AnalysisReport<F> analyze(const QRing<F>&, const AnalyzeOptions&);

GALG_INSTANTIATE(PrimeField)
GALG_INSTANTIATE(RationalField)

}  // namespace galg
