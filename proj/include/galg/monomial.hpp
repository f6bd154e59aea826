#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace galg {

/// Exponent vector; its length is the variable count of the ambient ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  long total_degree() const;
  long weighted_degree(const std::vector<int>& weights) const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

enum class OrderKind { grevlex, lex, weighted_grevlex };

/// A monomial order tag together with per-variable weights.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<int> weights;  // empty means all ones

  int weight(std::size_t i) const { return weights.empty() ? 1 : weights[i]; }
  bool operator==(const MonomialOrder&) const = default;
};

/// Total order on monomials of equal length. Throws RingMismatch on length mismatch.
std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

const char* order_name(OrderKind kind);

}  // namespace galg
