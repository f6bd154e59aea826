#include "galg/field.hpp"

#include <cctype>

namespace galg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw InputError("prime modulus must be below 2^31: " + std::to_string(p));
  if (!is_prime(p)) throw InputError("modulus is not prime: " + std::to_string(p));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  long long t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

namespace {

// Reduces a decimal digit string modulo p without overflow.
std::uint32_t digits_mod(std::string_view s, std::uint32_t p) {
  if (s.empty()) throw InputError("empty integer literal");
  std::uint64_t r = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad integer literal: " + std::string(s));
    r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

PrimeField::value_type PrimeField::from_string(std::string_view s) const {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  value_type v;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    value_type den = digits_mod(s.substr(slash + 1), p_);
    if (den == 0) throw InputError("denominator vanishes modulo " + std::to_string(p_));
    v = div(digits_mod(s.substr(0, slash), p_), den);
  } else {
    v = digits_mod(s, p_);
  }
  return negative ? neg(v) : v;
}

std::string PrimeField::to_string(value_type a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::value_type RationalField::from_string(std::string_view s) const {
  std::string str(s);
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw InputError("bad rational literal: " + str);
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator: " + str);
  q.canonicalize();
  return q;
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero in QQ");
  return 1 / a;
}

}  // namespace galg
