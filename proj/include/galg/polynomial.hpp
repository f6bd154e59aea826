#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galg/errors.hpp"
#include "galg/field.hpp"
#include "galg/monomial.hpp"

namespace galg {

/// Polynomial ring K[x_1..x_d] with a monomial order and positive weights.
template <Field F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> names, MonomialOrder order = {});

  const F& field() const { return field_; }
  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  /// Always has one entry per variable.
  const std::vector<int>& weights() const { return order_.weights; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool has_unit_weights() const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <Field F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <Field F>
RingPtr<F> make_poly_ring(F field, std::vector<std::string> names, MonomialOrder order = {}) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(names), std::move(order));
}

/// Exact polynomial: terms strictly descending in the ring order, no zero coefficients.
template <Field F>
class Polynomial {
 public:
  using Coeff = typename F::value_type;
  struct Term {
    Monomial mono;
    Coeff coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial(RingPtr<F> ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr<F> ring, const Coeff& c);
  static Polynomial constant(RingPtr<F> ring, int c) { return constant(ring, ring->field().from_int(c)); }
  static Polynomial variable(RingPtr<F> ring, std::size_t i);
  static Polynomial term(RingPtr<F> ring, Monomial m, const Coeff& c);
  /// Builds from terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  Polynomial monic() const;

  /// Common weighted degree of all terms; nullopt when inhomogeneous. Throws on zero.
  std::optional<long> weighted_degree() const;
  /// Largest weighted degree of a term; -1 for zero.
  long degree() const;

  bool operator==(const Polynomial& g) const;
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& g) const;

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <Field F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

/// Element of a free module R^k, one polynomial per component.
template <Field F>
using ModuleVector = std::vector<Polynomial<F>>;

template <Field F>
ModuleVector<F> zero_vector(const RingPtr<F>& ring, std::size_t rank) {
  return ModuleVector<F>(rank, Polynomial<F>(ring));
}

template <Field F>
ModuleVector<F> unit_vector(const RingPtr<F>& ring, std::size_t rank, std::size_t i) {
  auto v = zero_vector(ring, rank);
  v[i] = Polynomial<F>::constant(ring, 1);
  return v;
}

template <Field F>
bool is_zero_vector(const ModuleVector<F>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

/// Matrix stored by columns; column j is the image of the j-th basis vector.
template <Field F>
struct Matrix {
  RingPtr<F> ring;
  std::size_t rows = 0;
  std::vector<ModuleVector<F>> columns;

  std::size_t cols() const { return columns.size(); }
  const Polynomial<F>& at(std::size_t i, std::size_t j) const { return columns[j][i]; }
  Matrix transpose() const;
  /// this * other, with other.rows == this->cols().
  Matrix operator*(const Matrix& other) const;
  bool is_zero() const;
};

/// Evaluates a linear combination sum_j coeffs[j] * columns[j].
template <Field F>
ModuleVector<F> apply(const Matrix<F>& m, const ModuleVector<F>& coeffs);

/// Ring map sending variable i of f's ring to images[i] (all over `target`).
template <Field F>
Polynomial<F> substitute(const Polynomial<F>& f, const RingPtr<F>& target, const std::vector<Polynomial<F>>& images);

/// Renames variables: variable i of f's ring becomes variable var_map[i] of `target`.
template <Field F>
Polynomial<F> embed(const Polynomial<F>& f, const RingPtr<F>& target, const std::vector<std::size_t>& var_map);

/// Parses an expression like "3*x^2*y - z/2 + (x+1)^2". Throws InputError with a column on failure.
template <Field F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text);

extern template class PolyRing<PrimeField>;
extern template class PolyRing<RationalField>;
extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;
extern template struct Matrix<PrimeField>;
extern template struct Matrix<RationalField>;

}  // namespace galg
