#pragma once

#include <string>
#include <vector>

#include "galg/resolve.hpp"

namespace galg {

enum class Verdict { yes, no, inconclusive };
const char* verdict_name(Verdict v);

/// Ext^n together with the invariants used to compare modules up to isomorphism.
template <Field F>
struct ExtEntry {
  int n = 0;
  PresentedModule<F> module;
  bool is_zero = true;
  std::size_t min_gens = 0;
  std::vector<long long> hilbert;          // normalized Hilbert function; empty when zero or ungraded
  std::vector<Polynomial<F>> annihilator;  // reduced Groebner basis
};

template <Field F>
struct ExtTable {
  int lo = 0;
  int hi = -1;  // last degree actually computed
  std::vector<ExtEntry<F>> entries;
  std::string provenance;  // "over-P", "path A", "path B", ...
  bool complete = true;    // false when a scan stopped before its requested end

  const ExtEntry<F>* at(int n) const;
  std::vector<int> nonzero_degrees() const;
};

struct InvariantOptions {
  int hilbert_bound = 10;
  bool annihilator = true;
};

/// Ext^n(M, R) from a resolution of M; needs maps up to d_{n+1} unless the resolution is complete.
template <Field F>
PresentedModule<F> ext_module(const FreeResolution<F>& res, bool complete, int n);

template <Field F>
ExtEntry<F> describe(const PresentedModule<F>& m, int n, const InvariantOptions& opts = {});

/// Ext^n(M, R) for lo <= n <= hi, R the ring of M.
template <Field F>
ExtTable<F> ext_modules(const PresentedModule<F>& m, int lo, int hi, const InvariantOptions& opts = {});

template <Field F>
bool is_zero_module(const PresentedModule<F>& m);

/// Ann(M) = intersection of (U : e_j) over the generators.
template <Field F>
std::vector<Polynomial<F>> module_annihilator(const PresentedModule<F>& m);

/// The (k - i)-minors of the presentation, reduced modulo I (zero minors dropped).
template <Field F>
std::vector<Polynomial<F>> fitting_minors(const PresentedModule<F>& m, std::size_t i);
/// Reduced Groebner basis of Fitt_i(M).
template <Field F>
std::vector<Polynomial<F>> fitting_ideal(const PresentedModule<F>& m, std::size_t i);

template <Field F>
struct InvertibilityCertificate {
  bool verdict = false;
  std::vector<Polynomial<F>> fitt0;             // generators; all zero in S for a positive verdict
  std::vector<Polynomial<F>> fitt1;             // generators of Fitt_1
  std::vector<Polynomial<F>> one_coefficients;  // sum c_i fitt1_i = 1 in S
  std::string reason;
};

template <Field F>
InvertibilityCertificate<F> is_invertible(const PresentedModule<F>& m);
/// Re-checks a certificate by reduction modulo I.
template <Field F>
bool check_certificate(const QRing<F>& s, const InvertibilityCertificate<F>& c);

template <Field F>
struct GradedInvertibility {
  Verdict verdict = Verdict::inconclusive;
  std::vector<int> degrees;  // nonvanishing degrees
  std::string reason;
  InvertibilityCertificate<F> certificate;  // for the direct sum, when all entries pass the summand test
};

/// Decides whether the direct sum of the table's entries is invertible. A
/// negative answer is definitive as soon as one entry cannot be a summand of
/// an invertible module; a positive one needs the table to be complete.
template <Field F>
GradedInvertibility<F> graded_is_invertible(const ExtTable<F>& table);

/// Necessary condition for E to be a direct summand of an invertible module:
/// Fitt_1(E) = (1) and Fitt_0(E) idempotent.
template <Field F>
bool summand_test(const PresentedModule<F>& e, std::string* reason = nullptr);

template <Field F>
struct Decomposition {
  std::vector<int> degrees;
  std::vector<std::vector<Polynomial<F>>> annihilators;  // A_i = Ann(E^{n_i})
  std::vector<std::vector<Polynomial<F>>> summands;      // J_i = intersection of A_j, j != i
  std::vector<Polynomial<F>> idempotents;                // e_i in J_i, sum e_i = 1
  std::vector<QRing<F>> components;                      // S / A_i
  bool certified = false;
};

template <Field F>
Decomposition<F> graded_module_decomposition(const QRing<F>& s, const ExtTable<F>& table);

}  // namespace galg
