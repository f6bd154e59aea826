#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galg/hochschild.hpp"

namespace galg {

struct AnalyzeOptions {
  AnalysisOptions base;
  std::string path = "A";       // A | B | both
  std::optional<int> max_hochschild;  // default d
  bool hochschild = true;
  bool factorization = true;    // when the Hochschild table is invertible
  bool probe = true;            // when its preconditions hold
  bool require_factorization = false;
  bool require_probe = false;
  bool stop_at_first_nonzero = false;  // bigrade only
};

template <Field F>
struct FactorComponent {
  QRing<F> ring;
  std::vector<Polynomial<F>> ideal;  // A_i, reduced modulo I
  Polynomial<F> idempotent;
  int n = 0;                         // the degree where its Hochschild table lives
  int t = 0;
  std::string t_method;
  ExtTable<F> table;
};

template <Field F>
struct Factorization {
  std::vector<FactorComponent<F>> components;
  bool certified = false;
};

struct ProbeWindow {
  int lo = 0, hi = 0;  // (lo, hi]
  std::vector<int> nonzero;
  std::string prediction;  // gorenstein | not-gorenstein | none
};

template <Field F>
struct ProbeRecord {
  int t = 0;
  std::string t_method;
  ProbeWindow literal;  // (t, t + min(dim, 1)]
  ProbeWindow theorem;  // (t, t + dim]
  Verdict definitive = Verdict::inconclusive;
  std::string prediction;  // the literal window's
  std::string flag;        // CONCORDANT | COUNTEREXAMPLE CANDIDATE | DEGENERATE | ASSERTION VIOLATED
  ExtTable<F> table;       // Hochschild Ext over the union of the windows
};

template <Field F>
struct AnalysisReport {
  InvariantReport<F> inv;
  std::optional<ExtTable<F>> path_a, path_b;
  std::string path;
  std::optional<int> bigrade;
  std::optional<int> t;
  std::string t_method;
  std::optional<GradedInvertibility<F>> hochschild_invertible;
  std::optional<Factorization<F>> factorization;
  std::optional<ProbeRecord<F>> probe;
  std::vector<std::string> checks;  // consistency checks that ran and passed
  std::vector<std::string> diagnostics;
  std::optional<std::string> resource_limit;  // set when a budget ran out after the invariants

  /// The table used for verdicts: path A when present, else path B.
  const ExtTable<F>* hochschild() const { return path_a ? &*path_a : path_b ? &*path_b : nullptr; }
};

/// Runs the invariants, the Hochschild table, its invertibility, the
/// factorization and the probe, then checks the cross-theorem consistency
/// rules. A violated rule throws InternalError.
template <Field F>
AnalysisReport<F> analyze(const QRing<F>& s, const AnalyzeOptions& opts = {});

/// Components S / Ann(Ext^{n_i}) from an invertible Hochschild table, each
/// rechecked: its own table is concentrated in n_i and n_i = t_i.
template <Field F>
Factorization<F> gorenstein_factorization(const QRing<F>& s, const ExtTable<F>& table,
                                          const AnalysisOptions& opts = {});

template <Field F>
ProbeRecord<F> conjecture_probe(const InvariantReport<F>& r, bool generically_gorenstein);

/// Entry-by-entry differences in iso-invariants over the common range; empty when they agree.
template <Field F>
std::vector<std::string> compare_tables(const ExtTable<F>& a, const ExtTable<F>& b);

}  // namespace galg
