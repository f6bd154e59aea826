#pragma once

#include <memory>
#include <vector>

#include "galg/polynomial.hpp"

namespace galg {

template <Field F>
class QuotientRing;

template <Field F>
using QRing = std::shared_ptr<const QuotientRing<F>>;

/// S = P/I. The reduced Groebner basis of I is computed once at construction.
template <Field F>
class QuotientRing {
 public:
  static QRing<F> make(RingPtr<F> ambient, std::vector<Polynomial<F>> gens, bool toric_domain = false);
  static QRing<F> polynomial(RingPtr<F> ambient) { return make(std::move(ambient), {}); }

  const RingPtr<F>& ambient() const { return ambient_; }
  const F& field() const { return ambient_->field(); }
  std::size_t num_vars() const { return ambient_->num_vars(); }
  const std::vector<int>& weights() const { return ambient_->weights(); }
  const std::vector<Polynomial<F>>& ideal_gens() const { return gens_; }
  /// Reduced, monic, sorted by leading monomial ascending.
  const std::vector<Polynomial<F>>& basis() const { return basis_; }

  /// Every generator is homogeneous for the ring weights.
  bool homogeneous() const { return homogeneous_; }
  /// Presented as the kernel of a monomial map, hence a domain.
  bool toric_domain() const { return toric_; }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_unit(); }

  /// Normal form modulo I.
  Polynomial<F> reduce(const Polynomial<F>& f) const;
  Polynomial<F> zero() const { return Polynomial<F>(ambient_); }
  Polynomial<F> one() const { return Polynomial<F>::constant(ambient_, 1); }
  Polynomial<F> var(std::size_t i) const { return Polynomial<F>::variable(ambient_, i); }

  QuotientRing(RingPtr<F> ambient, std::vector<Polynomial<F>> gens, std::vector<Polynomial<F>> basis, bool toric);

 private:
  RingPtr<F> ambient_;
  std::vector<Polynomial<F>> gens_;
  std::vector<Polynomial<F>> basis_;
  bool homogeneous_ = true;
  bool toric_ = false;
};

/// The quotient S/(J) of S, as a new presentation over the same ambient ring.
template <Field F>
QRing<F> quotient_by(const QRing<F>& s, const std::vector<Polynomial<F>>& extra);

extern template class QuotientRing<PrimeField>;
extern template class QuotientRing<RationalField>;

}  // namespace galg
