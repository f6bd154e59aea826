#include "galg/quotient_ring.hpp"

#include "galg/groebner.hpp"

namespace galg {

template <Field F>
QuotientRing<F>::QuotientRing(RingPtr<F> ambient, std::vector<Polynomial<F>> gens, std::vector<Polynomial<F>> basis,
                              bool toric)
    : ambient_(std::move(ambient)), gens_(std::move(gens)), basis_(std::move(basis)), toric_(toric) {
  for (const auto& g : gens_)
    if (!g.is_zero() && !g.weighted_degree()) homogeneous_ = false;
}

template <Field F>
QRing<F> QuotientRing<F>::make(RingPtr<F> ambient, std::vector<Polynomial<F>> gens, bool toric_domain) {
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ambient)) throw RingMismatch("ideal generator over a different ring");
  auto basis = groebner_basis(gens);
  return std::make_shared<const QuotientRing<F>>(std::move(ambient), std::move(gens), std::move(basis), toric_domain);
}

template <Field F>
Polynomial<F> QuotientRing<F>::reduce(const Polynomial<F>& f) const {
  if (basis_.empty()) return f;
  return normal_form(f, basis_);
}

template <Field F>
QRing<F> quotient_by(const QRing<F>& s, const std::vector<Polynomial<F>>& extra) {
  auto gens = s->ideal_gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return QuotientRing<F>::make(s->ambient(), std::move(gens), false);
}

template class QuotientRing<PrimeField>;
template class QuotientRing<RationalField>;
template QRing<PrimeField> quotient_by(const QRing<PrimeField>&, const std::vector<Polynomial<PrimeField>>&);
template QRing<RationalField> quotient_by(const QRing<RationalField>&, const std::vector<Polynomial<RationalField>>&);

}  // namespace galg
