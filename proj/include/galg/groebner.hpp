#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "galg/quotient_ring.hpp"

namespace galg {

namespace detail {
template <Field F>
class Engine;
}

/// Term order on a free module S^k: the ring order refined by generator
/// degrees (shifts), compared term-over-position inside each block; lower
/// blocks compare larger. An optional elimination row is compared first.
struct ModuleOrder {
  std::vector<int> shifts;
  std::vector<int> blocks;
  std::vector<std::size_t> eliminate;  // variables whose total weight is compared before anything else

  static ModuleOrder graded(std::size_t rank, std::vector<int> shifts = {});
};

/// Reduced Groebner basis of a submodule of S^rank (rank 1: an ideal of S).
/// Elements are monic, fully reduced modulo each other and modulo I.
template <Field F>
struct GroebnerBasis {
  QRing<F> ring;
  std::size_t rank = 1;
  ModuleOrder order;
  std::vector<ModuleVector<F>> elements;
  bool reduced = true;
  struct Lead {
    std::size_t comp;
    Monomial mono;
  };
  std::vector<Lead> leads;  // one per element, filled by module_groebner_basis

  std::vector<Polynomial<F>> polynomials() const;  // rank 1 only
};

template <Field F>
GroebnerBasis<F> module_groebner_basis(const QRing<F>& s, std::size_t rank, const std::vector<ModuleVector<F>>& gens,
                                       ModuleOrder order = {});

/// Reduced Groebner basis of the ideal generated by gens in the ambient polynomial ring.
template <Field F>
std::vector<Polynomial<F>> groebner_basis(const std::vector<Polynomial<F>>& gens);
/// Reduced Groebner basis of (gens) as an ideal of S; together with S's own basis it is a basis of gens + I.
template <Field F>
GroebnerBasis<F> ideal_groebner_basis(const QRing<F>& s, const std::vector<Polynomial<F>>& gens);

/// Repeated normal forms against a fixed Groebner basis (and the relations of S).
template <Field F>
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis<F>& gb);
  explicit Reducer(const QRing<F>& s);
  ~Reducer();
  Reducer(Reducer&&) noexcept;

  ModuleVector<F> reduce(const ModuleVector<F>& v);
  Polynomial<F> reduce(const Polynomial<F>& f);
  bool contains(const ModuleVector<F>& v) { return is_zero_vector(reduce(v)); }
  bool contains(const Polynomial<F>& f) { return reduce(f).is_zero(); }

 private:
  RingPtr<F> ring_;
  std::size_t rank_;
  std::unique_ptr<detail::Engine<F>> engine_;
};

template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis);
template <Field F>
ModuleVector<F> normal_form(const ModuleVector<F>& v, const GroebnerBasis<F>& gb);

/// Syzygies of `vectors` in S^rank, with the degree of each syzygy when graded.
template <Field F>
struct Syzygies {
  std::vector<ModuleVector<F>> gens;
  std::vector<int> degrees;
};

/// Generators of ker(S^m -> S^rank, e_j -> vectors[j]). `source_degrees` are
/// the degrees of the e_j (defaults to the vectors' own degrees, 0 for zero
/// vectors). With `minimal` the result is a minimal generating set (graded
/// input only).
template <Field F>
Syzygies<F> syzygy_module(const QRing<F>& s, std::size_t rank, const std::vector<ModuleVector<F>>& vectors,
                          const std::vector<int>& shifts = {}, std::vector<int> source_degrees = {},
                          bool minimal = false);

/// Degree of a homogeneous vector of S^rank with the given generator shifts;
/// nullopt for inhomogeneous or zero vectors.
template <Field F>
std::optional<long> vector_degree(const ModuleVector<F>& v, const std::vector<int>& shifts);

/// Coefficients c with sum c_j * vectors[j] = target (mod I), or nullopt.
template <Field F>
std::optional<std::vector<Polynomial<F>>> lift(const QRing<F>& s, std::size_t rank,
                                               const std::vector<ModuleVector<F>>& vectors,
                                               const ModuleVector<F>& target);

/// Indices of a minimal generating subset of homogeneous vectors, in input order.
template <Field F>
std::vector<std::size_t> minimal_generators(const QRing<F>& s, std::size_t rank,
                                            const std::vector<ModuleVector<F>>& vectors,
                                            const std::vector<int>& shifts = {});

/// (J : f) in S. Returns (1) when f = 0 in S.
template <Field F>
std::vector<Polynomial<F>> ideal_quotient(const QRing<F>& s, const std::vector<Polynomial<F>>& ideal,
                                          const Polynomial<F>& f);
/// (U : e) = {r : r * e in U} for a submodule U of S^rank.
template <Field F>
std::vector<Polynomial<F>> module_quotient(const QRing<F>& s, std::size_t rank, const std::vector<ModuleVector<F>>& u,
                                           const ModuleVector<F>& e);
template <Field F>
std::vector<Polynomial<F>> intersect(const QRing<F>& s, const std::vector<Polynomial<F>>& a,
                                     const std::vector<Polynomial<F>>& b);

/// Generators of (gens) intersected with the subring on the other variables.
template <Field F>
std::vector<Polynomial<F>> eliminate(const std::vector<Polynomial<F>>& gens, const std::vector<std::size_t>& drop_vars);

/// Presentation of K[m_1..m_r] as K[T_1..T_r]/ker. Weights are the degrees of
/// the m_i divided by their gcd, so equal-degree monomials give a standard grading.
template <Field F>
QRing<F> kernel_of_monomial_map(const F& field, const std::vector<Monomial>& targets,
                                const std::vector<std::string>& new_var_names);

/// Independent Buchberger certificate: every S-polynomial of the basis (and
/// against the relations of S) reduces to zero under plain division. Returns
/// the number of pairs checked; throws InternalError on failure.
template <Field F>
std::size_t verify_groebner_basis(const GroebnerBasis<F>& gb);

}  // namespace galg
