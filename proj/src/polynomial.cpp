#include "galg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace galg {

// ---------------------------------------------------------------- PolyRing

template <Field F>
PolyRing<F>::PolyRing(F field, std::vector<std::string> names, MonomialOrder order)
    : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name: " + n);
  }
  if (order_.weights.empty()) order_.weights.assign(names_.size(), 1);
  if (order_.weights.size() != names_.size()) throw InputError("weight vector length differs from variable count");
  for (int w : order_.weights)
    if (w <= 0) throw InputError("weights must be positive");
  if (order_.kind == OrderKind::grevlex && !has_unit_weights())
    throw InputError("grevlex requires unit weights; use weighted-grevlex");
}

template <Field F>
std::optional<std::size_t> PolyRing<F>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

template <Field F>
bool PolyRing<F>::has_unit_weights() const {
  return std::all_of(order_.weights.begin(), order_.weights.end(), [](int w) { return w == 1; });
}

// -------------------------------------------------------------- Polynomial

template <Field F>
Polynomial<F>::Polynomial(RingPtr<F> ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  const F& k = ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return compare_monomials(order, a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
    } else {
      if (!terms_.empty() && k.is_zero(terms_.back().coeff)) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && k.is_zero(terms_.back().coeff)) terms_.pop_back();
}

template <Field F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Coeff& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->num_vars()), c});
  return p;
}

template <Field F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t i) {
  Monomial m(ring->num_vars());
  m[i] = 1;
  return term(ring, std::move(m), ring->field().one());
}

template <Field F>
Polynomial<F> Polynomial<F>::term(RingPtr<F> ring, Monomial m, const Coeff& c) {
  if (m.size() != ring->num_vars()) throw RingMismatch("monomial length differs from variable count");
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(m), c});
  return p;
}

template <Field F>
Polynomial<F> Polynomial<F>::from_sorted(RingPtr<F> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

template <Field F>
const typename Polynomial<F>::Term& Polynomial<F>::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

template <Field F>
void Polynomial<F>::require_same_ring(const Polynomial& g) const {
  if (!ring_ || !g.ring_) throw RingMismatch("polynomial without a ring");
  if (!same_ring(ring_, g.ring_)) throw RingMismatch("polynomials over different rings");
}

template <Field F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& g) const {
  require_same_ring(g);
  const auto& order = ring_->order();
  const F& k = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    auto c = compare_monomials(order, terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      auto s = k.add(terms_[i].coeff, g.terms_[j].coeff);
      if (!k.is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

template <Field F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

template <Field F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& g) const {
  return *this + (-g);
}

template <Field F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& g) const {
  require_same_ring(g);
  const F& k = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(prod));
}

template <Field F>
Polynomial<F> Polynomial<F>::scale(const Coeff& c) const {
  const F& k = ring_->field();
  if (k.is_zero(c)) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = k.mul(t.coeff, c);
  return r;
}

template <Field F>
Polynomial<F> Polynomial<F>::mul_term(const Monomial& m, const Coeff& c) const {
  const F& k = ring_->field();
  if (k.is_zero(c)) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff = k.mul(t.coeff, c);
  }
  return r;
}

template <Field F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(leading_coeff()));
}

template <Field F>
std::optional<long> Polynomial<F>::weighted_degree() const {
  if (is_zero()) throw std::domain_error("weighted degree of the zero polynomial");
  const auto& w = ring_->weights();
  long d = terms_.front().mono.weighted_degree(w);
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(w) != d) return std::nullopt;
  return d;
}

template <Field F>
long Polynomial<F>::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(ring_->weights()));
  return d;
}

template <Field F>
bool Polynomial<F>::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  if (ring_ && g.ring_ && !same_ring(ring_, g.ring_)) return false;
  const F* k = ring_ ? &ring_->field() : (g.ring_ ? &g.ring_->field() : nullptr);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == g.terms_[i].mono)) return false;
    if (!k->equal(terms_[i].coeff, g.terms_[i].coeff)) return false;
  }
  return true;
}

template <Field F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  const F& k = ring_->field();
  const auto& names = ring_->names();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = k.is_negative(t.coeff);
    auto mag = neg ? k.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool one = k.is_one(mag);
    bool constant = t.mono.is_one();
    if (!one || constant) os << k.to_string(mag);
    bool need_star = !one || constant;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      need_star = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ Matrix

template <Field F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t;
  t.ring = ring;
  t.rows = cols();
  t.columns.assign(rows, zero_vector(ring, cols()));
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t i = 0; i < rows; ++i) t.columns[i][j] = columns[j][i];
  return t;
}

template <Field F>
Matrix<F> Matrix<F>::operator*(const Matrix& other) const {
  if (other.rows != cols()) throw RingMismatch("matrix dimensions do not match");
  Matrix r;
  r.ring = ring;
  r.rows = rows;
  for (const auto& c : other.columns) r.columns.push_back(apply(*this, c));
  return r;
}

template <Field F>
bool Matrix<F>::is_zero() const {
  for (const auto& c : columns)
    if (!is_zero_vector(c)) return false;
  return true;
}

template <Field F>
ModuleVector<F> apply(const Matrix<F>& m, const ModuleVector<F>& coeffs) {
  if (coeffs.size() != m.cols()) throw RingMismatch("coefficient vector length differs from column count");
  auto out = zero_vector(m.ring, m.rows);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (coeffs[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows; ++i)
      if (!m.columns[j][i].is_zero()) out[i] = out[i] + coeffs[j] * m.columns[j][i];
  }
  return out;
}

// --------------------------------------------------------- ring morphisms

template <Field F>
Polynomial<F> substitute(const Polynomial<F>& f, const RingPtr<F>& target, const std::vector<Polynomial<F>>& images) {
  if (images.size() != f.ring()->num_vars()) throw RingMismatch("substitution needs one image per variable");
  const std::size_t n = images.size();
  std::vector<std::vector<Polynomial<F>>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial<F>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<F>::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial<F> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<F> acc = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i] > 0) acc = acc * power(i, t.mono[i]);
    result = result + acc;
  }
  return result;
}

template <Field F>
Polynomial<F> embed(const Polynomial<F>& f, const RingPtr<F>& target, const std::vector<std::size_t>& var_map) {
  if (var_map.size() != f.ring()->num_vars()) throw RingMismatch("embedding needs one target per variable");
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < var_map.size(); ++i) m[var_map[i]] += t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial<F>(target, std::move(terms));
}

// ------------------------------------------------------------------ parser

namespace {

template <Field F>
class ExprParser {
 public:
  ExprParser(const RingPtr<F>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<F> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip_ws();
        auto digits = number_literal();
        auto d = ring_->field().from_string(digits);
        if (ring_->field().is_zero(d)) fail("division by zero");
        acc = acc.scale(ring_->field().inv(d));
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> factor() {
    Polynomial<F> base = primary();
    if (accept('^')) {
      skip_ws();
      auto digits = number_literal();
      if (digits.size() > 6) fail("exponent too large");
      unsigned long e = std::stoul(std::string(digits));
      Polynomial<F> r = Polynomial<F>::constant(ring_, 1);
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  std::string_view number_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  Polynomial<F> primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto digits = number_literal();
      return Polynomial<F>::constant(ring_, ring_->field().from_string(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial<F>::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const RingPtr<F>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <Field F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text) {
  return ExprParser<F>(ring, text).parse();
}

#define GALG_INSTANTIATE(F)                                                                                   \
  template class PolyRing<F>;                                                                                 \
  template class Polynomial<F>;                                                                               \
  template struct Matrix<F>;                                                                                  \
  template ModuleVector<F> apply(const Matrix<F>&, const ModuleVector<F>&);                                   \
  template Polynomial<F> substitute(const Polynomial<F>&, const RingPtr<F>&, const std::vector<Polynomial<F>>&); \
  template Polynomial<F> embed(const Polynomial<F>&, const RingPtr<F>&, const std::vector<std::size_t>&);      \
  template Polynomial<F> parse_polynomial(const RingPtr<F>&, std::string_view);

GALG_INSTANTIATE(PrimeField)
GALG_INSTANTIATE(RationalField)

}  // namespace galg
