#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galg/exthom.hpp"

namespace galg {

struct AnalysisOptions {
  bool assume_connected = false;
  bool assume_generically_gorenstein = false;
  InvariantOptions ext;
};

/// Numerical invariants of S = P/I as a P-module, with the CM and Gorenstein verdicts.
template <Field F>
struct InvariantReport {
  QRing<F> ring;
  int d = 0;  // ambient variable count
  int dim = 0;
  int grade = 0;
  int pd = 0;
  std::optional<int> depth;  // homogeneous input only
  bool homogeneous = false;
  bool connected = false;  // known connected: graded with S_0 = K, or asserted
  BettiTable betti;        // graded input only
  ExtTable<F> ext_p;       // Ext^n_P(S, P) for 0 <= n <= d, entries regarded over S

  Verdict cm = Verdict::inconclusive;
  int window_lo = 0, window_hi = 0;  // the window (lo, hi]
  std::vector<int> window_nonzero;
  std::string cm_reason;

  Verdict gorenstein = Verdict::inconclusive;
  InvertibilityCertificate<F> gorenstein_certificate;
  std::string gorenstein_reason;

  std::vector<std::string> diagnostics;
};

/// Computes dim, grade, pd, depth and Ext_P(S, P), then the CM and Gorenstein
/// verdicts. Throws InternalError when the Ext-based and dimension-based
/// values disagree.
template <Field F>
InvariantReport<F> invariants(const QRing<F>& s, const AnalysisOptions& opts = {});

template <Field F>
int grade(const QRing<F>& s);
template <Field F>
int projective_dimension(const QRing<F>& s);
template <Field F>
int depth(const QRing<F>& s);

/// Ext^p_P(S, P) as an S-module; needs a CM verdict.
template <Field F>
PresentedModule<F> canonical_module(const InvariantReport<F>& r);

template <Field F>
struct TachikawaResult {
  Verdict verdict = Verdict::inconclusive;
  ExtTable<F> table;  // Ext^n_S(C, S), 1 <= n <= dim S
  std::string reason;
};

/// Vanishing of Ext^n_S(C, S) for 1 <= n <= dim S; needs CM and generic
/// Gorensteinness (asserted, or a toric domain).
template <Field F>
TachikawaResult<F> tachikawa_test(const InvariantReport<F>& r, bool generically_gorenstein);

}  // namespace galg
