#include "galg/monomial.hpp"

#include <algorithm>
#include <cassert>

#include "galg/errors.hpp"

namespace galg {

long Monomial::total_degree() const {
  long d = 0;
  for (auto e : exps_) d += e;
  return d;
}

long Monomial::weighted_degree(const std::vector<int>& weights) const {
  if (weights.empty()) return total_degree();
  long d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<long>(exps_[i]) * weights[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], other.exps_[i]);
  return r;
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw RingMismatch("monomials of different lengths compared");
  const std::size_t n = a.size();
  if (order.kind == OrderKind::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  long da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += static_cast<long>(a[i]) * order.weight(i);
    db += static_cast<long>(b[i]) * order.weight(i);
  }
  if (da != db) return da <=> db;
  // reverse lexicographic: the smaller exponent in the last differing slot wins
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

const char* order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::weighted_grevlex: return "weighted-grevlex";
  }
  return "?";
}

}  // namespace galg
