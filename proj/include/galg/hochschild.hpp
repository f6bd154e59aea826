#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galg/invariants.hpp"

namespace galg {

/// S^e = S (x) S on variables x_1..x_d, y_1..y_d (y_i named x_i').
template <Field F>
struct EnvelopingAlgebra {
  QRing<F> ring;
  QRing<F> base;                             // S
  std::vector<Polynomial<F>> diagonal;       // x_i - y_i
  PresentedModule<F> diagonal_module;        // S as a cyclic S^e-module
};

template <Field F>
EnvelopingAlgebra<F> enveloping_algebra(const QRing<F>& s);

/// An S^e-module on which the diagonal ideal acts trivially, as an S-module (y_i -> x_i).
template <Field F>
PresentedModule<F> restrict_to_diagonal(const EnvelopingAlgebra<F>& e, const PresentedModule<F>& m);

struct HochschildOptions {
  InvariantOptions ext;
  /// Stop at the first nonzero entry that cannot be a summand of an invertible module.
  bool early_exit = false;
  /// Stop at the first nonzero entry.
  bool stop_at_first_nonzero = false;
};

/// Path A: Ext^n_{S^e}(S, S^e) for 0 <= n <= n_max from a resolution of the diagonal module.
template <Field F>
ExtTable<F> hochschild_ext_table(const QRing<F>& s, int n_max, const HochschildOptions& opts = {});

/// Path B: Ext^n_{S^e}(S, S^e) = Ext^{n-b}_S(C, S) with b = d - pd, for 0 <= n <= n_max; needs CM.
template <Field F>
ExtTable<F> hochschild_ext_via_reduction(const InvariantReport<F>& r, int n_max, const InvariantOptions& opts = {});

template <Field F>
struct BigradeReport {
  std::optional<int> bigrade;  // absent when the scan was cut short
  int lo = 0, hi = 0;          // scan range
  ExtTable<F> table;
  std::string path;
  std::optional<int> t;        // residual transcendence degree
  std::string t_method;
};

/// Smallest n in [0, d] with Ext^n_{S^e}(S, S^e) != 0.
template <Field F>
BigradeReport<F> bigrade(const InvariantReport<F>& r, const std::string& path = "A");

/// t = d - pd (CM) or d - grade (domain); both when both apply, and they must agree.
template <Field F>
std::pair<int, std::string> residual_tr_deg(const InvariantReport<F>& r);

}  // namespace galg
