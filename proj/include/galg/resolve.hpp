#pragma once

#include <map>
#include <vector>

#include "galg/groebner.hpp"

namespace galg {

/// coker(S^m -> S^k): `generators` = k, each relation is a column of length k.
template <Field F>
struct PresentedModule {
  QRing<F> ring;
  std::size_t generators = 0;
  std::vector<ModuleVector<F>> relations;
  std::vector<int> degrees;  // generator degrees, meaningful when graded
  bool graded = false;

  static PresentedModule free(const QRing<F>& s, std::size_t rank, std::vector<int> degrees = {});
  /// S/J as a cyclic module generated in degree 0.
  static PresentedModule cyclic(const QRing<F>& s, const std::vector<Polynomial<F>>& ideal);
  Matrix<F> matrix() const;
  /// Every relation is homogeneous for the generator degrees.
  bool degrees_consistent() const;
};

/// Drops generators killed by constant unit entries and zero relations; in
/// the graded case also keeps only a minimal set of relations. Presents the
/// same module.
template <Field F>
PresentedModule<F> prune(const PresentedModule<F>& m);

/// Minimal generator count for graded modules; generator count of the pruned
/// presentation (an upper bound) otherwise.
template <Field F>
std::size_t min_generators(const PresentedModule<F>& m);

template <Field F>
struct FreeResolution {
  QRing<F> ring;
  std::vector<Matrix<F>> maps;             // maps[i] = d_{i+1} : F_{i+1} -> F_i
  std::vector<std::size_t> ranks;          // rank F_0, F_1, ...
  std::vector<std::vector<int>> degrees;   // generator degrees of each F_i (graded case)
  bool minimal = false;
  bool truncated = false;
  bool graded = false;

  std::size_t length() const { return maps.size(); }
};

/// Builds a resolution one map at a time.
template <Field F>
class Resolver {
 public:
  Resolver(const PresentedModule<F>& m, bool minimal);
  /// Computes the next map; false once the last kernel was zero.
  bool extend();
  /// Extends until `length` maps exist or the resolution is complete.
  void ensure(std::size_t length);
  bool complete() const { return complete_; }
  const FreeResolution<F>& resolution() const { return res_; }

 private:
  FreeResolution<F> res_;
  std::vector<ModuleVector<F>> first_;
  std::vector<int> first_degrees_;
  bool complete_ = false;
};

/// Over a polynomial ring the resolution runs to completion; over a quotient
/// ring it stops after `max_length` maps (truncated unless a kernel vanished).
template <Field F>
FreeResolution<F> free_resolution(const PresentedModule<F>& m, std::size_t max_length, bool minimal);

/// Checks d_i d_{i+1} = 0 and that every syzygy of d_i lies in the span of
/// d_{i+1}. Throws InternalError on failure; returns the number of checks.
template <Field F>
std::size_t verify_resolution(const FreeResolution<F>& r);

/// homological degree -> (internal degree -> count); internal degree 0 only when ungraded.
using BettiTable = std::vector<std::map<int, std::size_t>>;
template <Field F>
BettiTable betti_numbers(const FreeResolution<F>& r);

/// Numerator / prod_i (1 - T^{w_i}); numerator[j] is the coefficient of T^{low + j}.
struct HilbertSeries {
  std::vector<long long> numerator;
  int low = 0;
  std::vector<int> weights;

  /// Values of the Hilbert function at degrees from..to inclusive.
  std::vector<long long> values(int from, int to) const;
  /// First degree with a nonzero value, searched up to `limit`.
  std::optional<int> initial_degree(int limit) const;
  bool operator==(const HilbertSeries& o) const;
  std::string to_string() const;
};

/// Numerator of P/(monomials) for monomials given as exponent vectors.
std::vector<long long> monomial_ideal_numerator(std::vector<std::vector<std::uint32_t>> gens,
                                                const std::vector<int>& weights);

/// Hilbert series from the initial module of the relations together with the
/// initial ideal of S.
template <Field F>
HilbertSeries hilbert_series(const PresentedModule<F>& m);
/// Hilbert series as the alternating sum of graded Betti numbers of the module
/// viewed over the ambient polynomial ring.
template <Field F>
HilbertSeries hilbert_series_from_resolution(const PresentedModule<F>& m);
/// Hilbert function normalized to start at the first nonzero degree, of length `bound`.
template <Field F>
std::vector<long long> normalized_hilbert_function(const PresentedModule<F>& m, int bound);

/// Largest set of variables independent modulo the initial ideal; -1 for the unit ideal.
template <Field F>
int krull_dim(const QRing<F>& s);
int krull_dim_of_monomial_ideal(const std::vector<std::vector<std::uint32_t>>& leads, std::size_t nvars);

}  // namespace galg
