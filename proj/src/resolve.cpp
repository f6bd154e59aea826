#include "galg/resolve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace galg {

// -------------------------------------------------------- PresentedModule

template <Field F>
PresentedModule<F> PresentedModule<F>::free(const QRing<F>& s, std::size_t rank, std::vector<int> degrees) {
  PresentedModule m;
  m.ring = s;
  m.generators = rank;
  m.degrees = degrees.empty() ? std::vector<int>(rank, 0) : std::move(degrees);
  m.graded = s->homogeneous();
  return m;
}

template <Field F>
PresentedModule<F> PresentedModule<F>::cyclic(const QRing<F>& s, const std::vector<Polynomial<F>>& ideal) {
  PresentedModule m = free(s, 1);
  for (const auto& g : ideal)
    if (!g.is_zero()) m.relations.push_back({g});
  m.graded = s->homogeneous() && m.degrees_consistent();
  return m;
}

template <Field F>
Matrix<F> PresentedModule<F>::matrix() const {
  return Matrix<F>{ring->ambient(), generators, relations};
}

template <Field F>
bool PresentedModule<F>::degrees_consistent() const {
  if (degrees.size() != generators) return false;
  for (const auto& r : relations)
    if (!is_zero_vector(r) && !vector_degree(r, degrees)) return false;
  return true;
}

namespace {

template <Field F>
bool constant_unit(const Polynomial<F>& p) {
  return p.is_unit();
}

// v - c * w, reduced modulo I
template <Field F>
void subtract_multiple(ModuleVector<F>& v, const Polynomial<F>& c, const ModuleVector<F>& w, Reducer<F>& red) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] = red.reduce(v[i] - c * w[i]);
}

}  // namespace

template <Field F>
PresentedModule<F> prune(const PresentedModule<F>& m) {
  Reducer<F> red(m.ring);
  const F& k = m.ring->field();
  PresentedModule<F> out = m;
  for (auto& col : out.relations)
    for (auto& e : col) e = red.reduce(e);
  for (;;) {
    std::size_t pj = 0, pr = 0;
    bool found = false;
    for (std::size_t j = 0; j < out.relations.size() && !found; ++j)
      for (std::size_t r = 0; r < out.generators; ++r)
        if (constant_unit(out.relations[j][r])) {
          pj = j;
          pr = r;
          found = true;
          break;
        }
    if (!found) break;
    const auto pivot = out.relations[pj];
    const auto uinv = k.inv(pivot[pr].leading_coeff());
    for (std::size_t c = 0; c < out.relations.size(); ++c) {
      if (c == pj || out.relations[c][pr].is_zero()) continue;
      subtract_multiple(out.relations[c], out.relations[c][pr].scale(uinv), pivot, red);
    }
    out.relations.erase(out.relations.begin() + static_cast<long>(pj));
    for (auto& col : out.relations) col.erase(col.begin() + static_cast<long>(pr));
    if (pr < out.degrees.size()) out.degrees.erase(out.degrees.begin() + static_cast<long>(pr));
    --out.generators;
  }
  std::erase_if(out.relations, [](const ModuleVector<F>& v) { return is_zero_vector(v); });
  if (out.graded && out.ring->homogeneous() && !out.relations.empty()) {
    auto keep = minimal_generators(out.ring, out.generators, out.relations, out.degrees);
    std::vector<ModuleVector<F>> rel;
    for (auto i : keep) rel.push_back(std::move(out.relations[i]));
    out.relations = std::move(rel);
  }
  return out;
}

template <Field F>
std::size_t min_generators(const PresentedModule<F>& m) {
  return prune(m).generators;
}

// --------------------------------------------------------- FreeResolution

namespace {

// Splits off trivial summands R --u--> R between d_i (columns in F_{i-1}) and
// the next map whose columns live in F_i.
template <Field F>
void prune_pair(Matrix<F>& di, std::vector<int>& degs_i, std::vector<ModuleVector<F>>& next,
                std::vector<int>& next_degs, Reducer<F>& red, const F& k) {
  for (;;) {
    std::size_t pc = 0, pr = 0;
    bool found = false;
    for (std::size_t c = 0; c < next.size() && !found; ++c)
      for (std::size_t r = 0; r < next[c].size(); ++r)
        if (next[c][r].is_unit()) {
          pc = c;
          pr = r;
          found = true;
          break;
        }
    if (!found) return;
    const auto pivot = next[pc];
    const auto uinv = k.inv(pivot[pr].leading_coeff());
    for (std::size_t c = 0; c < next.size(); ++c) {
      if (c == pc || next[c][pr].is_zero()) continue;
      subtract_multiple(next[c], next[c][pr].scale(uinv), pivot, red);
    }
    next.erase(next.begin() + static_cast<long>(pc));
    if (pc < next_degs.size()) next_degs.erase(next_degs.begin() + static_cast<long>(pc));
    for (auto& col : next) col.erase(col.begin() + static_cast<long>(pr));
    di.columns.erase(di.columns.begin() + static_cast<long>(pr));
    if (pr < degs_i.size()) degs_i.erase(degs_i.begin() + static_cast<long>(pr));
    std::erase_if(next, [](const ModuleVector<F>& v) { return is_zero_vector(v); });
  }
}

}  // namespace

template <Field F>
Resolver<F>::Resolver(const PresentedModule<F>& m, bool minimal) {
  const auto& s = m.ring;
  const bool graded = m.graded && s->homogeneous() && m.degrees_consistent();
  if (minimal && !graded) throw PreconditionError("a minimal resolution needs a graded module");
  PresentedModule<F> n = prune(m);
  res_.ring = s;
  res_.graded = graded;
  res_.minimal = graded;
  res_.ranks.push_back(n.generators);
  res_.degrees.push_back(graded ? n.degrees : std::vector<int>(n.generators, 0));
  first_ = std::move(n.relations);
  for (const auto& c : first_)
    first_degrees_.push_back(graded ? static_cast<int>(*vector_degree(c, res_.degrees.back())) : 0);
  complete_ = first_.empty();
}

template <Field F>
bool Resolver<F>::extend() {
  if (complete_) return false;
  const auto& s = res_.ring;
  std::vector<ModuleVector<F>> cols;
  std::vector<int> degs;
  if (res_.maps.empty()) {
    cols = std::move(first_);
    degs = std::move(first_degrees_);
  } else {
    const auto& last = res_.maps.back();
    const auto& shifts = res_.degrees[res_.degrees.size() - 2];
    auto syz = syzygy_module(s, last.rows, last.columns, res_.graded ? shifts : std::vector<int>{}, res_.degrees.back(),
                             res_.graded);
    cols = std::move(syz.gens);
    degs = res_.graded ? std::move(syz.degrees) : std::vector<int>(cols.size(), 0);
    if (!res_.graded && !cols.empty()) {
      Reducer<F> red(s);
      prune_pair(res_.maps.back(), res_.degrees.back(), cols, degs, red, s->field());
      res_.ranks.back() = res_.maps.back().cols();
    }
    if (cols.empty()) {
      complete_ = true;
      return false;
    }
  }
  const std::size_t prev_rank = res_.ranks.back();
  res_.maps.push_back(Matrix<F>{s->ambient(), prev_rank, std::move(cols)});
  res_.ranks.push_back(res_.maps.back().cols());
  res_.degrees.push_back(std::move(degs));
  if (s->is_zero_ideal() && res_.graded && res_.maps.size() > s->num_vars())
    throw InternalError("graded resolution over a polynomial ring exceeded the variable count");
  return true;
}

template <Field F>
void Resolver<F>::ensure(std::size_t length) {
  while (res_.maps.size() < length && extend()) {
  }
}

template <Field F>
FreeResolution<F> free_resolution(const PresentedModule<F>& m, std::size_t max_length, bool minimal) {
  Resolver<F> r(m, minimal);
  const auto& s = m.ring;
  if (s->is_zero_ideal() && r.resolution().graded) {
    while (r.extend()) {
    }
  } else {
    r.ensure(max_length);
  }
  FreeResolution<F> out = r.resolution();
  out.truncated = !r.complete();
  return out;
}

template <Field F>
std::size_t verify_resolution(const FreeResolution<F>& r) {
  const auto& s = r.ring;
  Reducer<F> red(s);
  std::size_t checks = 0;
  for (std::size_t i = 0; i + 1 < r.maps.size(); ++i) {
    const auto& a = r.maps[i];
    const auto& b = r.maps[i + 1];
    for (const auto& col : b.columns) {
      auto img = apply(a, col);
      for (auto& e : img)
        if (!red.reduce(e).is_zero()) throw InternalError("resolution certificate failed: d_i d_{i+1} != 0");
      ++checks;
    }
  }
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    const auto& a = r.maps[i];
    // graded shifts keep the syzygy computation degree by degree
    const bool graded = r.graded && r.degrees.size() > i + 1;
    auto syz = graded ? syzygy_module(s, a.rows, a.columns, r.degrees[i], r.degrees[i + 1])
                      : syzygy_module(s, a.rows, a.columns, {}, std::vector<int>(a.cols(), 0));
    if (i + 1 < r.maps.size()) {
      const auto& b = r.maps[i + 1];
      auto gb = graded ? module_groebner_basis(s, b.rows, b.columns, ModuleOrder::graded(b.rows, r.degrees[i + 1]))
                       : module_groebner_basis(s, b.rows, b.columns);
      Reducer<F> in_image(gb);
      for (const auto& z : syz.gens) {
        if (!in_image.contains(z)) throw InternalError("resolution certificate failed: a syzygy is not in the next image");
        ++checks;
      }
    } else if (!r.truncated && !syz.gens.empty()) {
      throw InternalError("resolution certificate failed: the last map is not injective");
    }
  }
  return checks;
}

template <Field F>
BettiTable betti_numbers(const FreeResolution<F>& r) {
  BettiTable t(r.ranks.size());
  for (std::size_t i = 0; i < r.ranks.size(); ++i) {
    if (r.graded) {
      for (int d : r.degrees[i]) ++t[i][d];
    } else if (r.ranks[i] > 0) {
      t[i][0] = r.ranks[i];
    }
  }
  return t;
}

// ---------------------------------------------------------- HilbertSeries

std::vector<long long> HilbertSeries::values(int from, int to) const {
  std::vector<long long> out;
  if (to < from) return out;
  const int top = to - low;
  if (top < 0) return std::vector<long long>(static_cast<std::size_t>(to - from + 1), 0);
  std::vector<long long> a(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t j = 0; j < numerator.size() && j < a.size(); ++j) a[j] = numerator[j];
  for (int w : weights)
    for (std::size_t j = static_cast<std::size_t>(w); j < a.size(); ++j) a[j] += a[j - static_cast<std::size_t>(w)];
  for (int d = from; d <= to; ++d) out.push_back(d < low ? 0 : a[static_cast<std::size_t>(d - low)]);
  return out;
}

std::optional<int> HilbertSeries::initial_degree(int limit) const {
  if (limit < low) return std::nullopt;
  auto v = values(low, limit);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return low + static_cast<int>(i);
  return std::nullopt;
}

namespace {
std::pair<std::vector<long long>, int> normalize(const std::vector<long long>& num, int low) {
  std::size_t b = 0, e = num.size();
  while (b < e && num[b] == 0) ++b;
  while (e > b && num[e - 1] == 0) --e;
  if (b == e) return {{}, 0};
  return {std::vector<long long>(num.begin() + static_cast<long>(b), num.begin() + static_cast<long>(e)),
          low + static_cast<int>(b)};
}
}  // namespace

bool HilbertSeries::operator==(const HilbertSeries& o) const {
  auto wa = weights, wb = o.weights;
  std::sort(wa.begin(), wa.end());
  std::sort(wb.begin(), wb.end());
  return wa == wb && normalize(numerator, low) == normalize(o.numerator, o.low);
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  auto [num, lo] = normalize(numerator, low);
  os << "(";
  if (num.empty()) os << "0";
  bool first = true;
  for (std::size_t j = 0; j < num.size(); ++j) {
    if (num[j] == 0) continue;
    long long c = num[j];
    int d = lo + static_cast<int>(j);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    long long a = c < 0 ? -c : c;
    if (a != 1 || d == 0) os << a;
    if (d != 0) os << (a != 1 ? "*" : "") << "T" << (d != 1 ? "^" + std::to_string(d) : "");
    first = false;
  }
  os << ")/(";
  for (std::size_t i = 0; i < weights.size(); ++i)
    os << (i ? "*" : "") << "(1-T" << (weights[i] != 1 ? "^" + std::to_string(weights[i]) : "") << ")";
  os << ")";
  return os.str();
}

namespace {

using Exps = std::vector<std::uint32_t>;

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void minimalize(std::vector<Exps>& g) {
  std::sort(g.begin(), g.end(), [](const Exps& a, const Exps& b) {
    return std::accumulate(a.begin(), a.end(), 0u) < std::accumulate(b.begin(), b.end(), 0u);
  });
  std::vector<Exps> out;
  for (auto& m : g) {
    bool redundant = false;
    for (const auto& o : out)
      if (divides(o, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(m));
  }
  g = std::move(out);
}

void add_shifted(std::vector<long long>& a, const std::vector<long long>& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
}

std::vector<long long> numerator_rec(std::vector<Exps> g, const std::vector<int>& w) {
  minimalize(g);
  if (g.empty()) return {1};
  const std::size_t n = w.size();
  std::vector<std::size_t> count(n, 0);
  bool all_pure = true;
  for (const auto& m : g) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i) support += m[i] > 0;
    if (support > 1) {
      all_pure = false;
      for (std::size_t i = 0; i < n; ++i) count[i] += m[i] > 0;
    }
  }
  if (all_pure) {
    std::vector<long long> out{1};
    for (const auto& m : g) {
      std::size_t d = 0;
      for (std::size_t i = 0; i < n; ++i) d += static_cast<std::size_t>(m[i]) * static_cast<std::size_t>(w[i]);
      std::vector<long long> shifted(out.size() + d, 0);
      for (std::size_t j = 0; j < out.size(); ++j) {
        shifted[j] += out[j];
        shifted[j + d] -= out[j];
      }
      out = std::move(shifted);
    }
    return out;
  }
  const std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::uint32_t e = 0;
  for (const auto& m : g) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i) support += m[i] > 0;
    if (support > 1 && m[v] > 0) e = e == 0 ? m[v] : std::min(e, m[v]);
  }
  // N(G) = N(G + p) + T^deg(p) N(G : p) with pivot p = x_v^e
  std::vector<Exps> plus = g;
  Exps p(n, 0);
  p[v] = e;
  plus.push_back(p);
  std::vector<Exps> colon = g;
  for (auto& m : colon) m[v] = m[v] > e ? m[v] - e : 0;
  auto a = numerator_rec(std::move(plus), w);
  auto b = numerator_rec(std::move(colon), w);
  add_shifted(a, b, static_cast<std::size_t>(e) * static_cast<std::size_t>(w[v]));
  return a;
}

}  // namespace

std::vector<long long> monomial_ideal_numerator(std::vector<std::vector<std::uint32_t>> gens,
                                                const std::vector<int>& weights) {
  return numerator_rec(std::move(gens), weights);
}

template <Field F>
HilbertSeries hilbert_series(const PresentedModule<F>& m) {
  const auto& s = m.ring;
  if (!s->homogeneous() || !m.degrees_consistent()) throw PreconditionError("Hilbert series needs a graded module");
  HilbertSeries hs;
  hs.weights = s->weights();
  if (m.generators == 0) return hs;
  auto gb = module_groebner_basis(s, m.generators, m.relations, ModuleOrder::graded(m.generators, m.degrees));
  std::vector<Exps> ring_leads;
  for (const auto& g : s->basis()) ring_leads.push_back(g.leading_monomial().exponents());
  hs.low = *std::min_element(m.degrees.begin(), m.degrees.end());
  for (std::size_t c = 0; c < m.generators; ++c) {
    auto leads = ring_leads;
    for (const auto& l : gb.leads)
      if (l.comp == c) leads.push_back(l.mono.exponents());
    auto num = monomial_ideal_numerator(std::move(leads), hs.weights);
    add_shifted(hs.numerator, num, static_cast<std::size_t>(m.degrees[c] - hs.low));
  }
  return hs;
}

template <Field F>
HilbertSeries hilbert_series_from_resolution(const PresentedModule<F>& m) {
  const auto& s = m.ring;
  if (!s->homogeneous() || !m.degrees_consistent()) throw PreconditionError("Hilbert series needs a graded module");
  auto p = QuotientRing<F>::polynomial(s->ambient());
  PresentedModule<F> lifted = PresentedModule<F>::free(p, m.generators, m.degrees);
  lifted.relations = m.relations;
  for (std::size_t c = 0; c < m.generators; ++c)
    for (const auto& g : s->basis()) {
      auto v = zero_vector(s->ambient(), m.generators);
      v[c] = g;
      lifted.relations.push_back(std::move(v));
    }
  lifted.graded = true;
  HilbertSeries hs;
  hs.weights = s->weights();
  if (m.generators == 0) return hs;
  auto res = free_resolution(lifted, s->num_vars() + 1, true);
  int lo = 0;
  bool any = false;
  for (const auto& degs : res.degrees)
    for (int d : degs) {
      lo = any ? std::min(lo, d) : d;
      any = true;
    }
  hs.low = lo;
  for (std::size_t i = 0; i < res.degrees.size(); ++i)
    for (int d : res.degrees[i]) {
      auto idx = static_cast<std::size_t>(d - lo);
      if (hs.numerator.size() <= idx) hs.numerator.resize(idx + 1, 0);
      hs.numerator[idx] += (i % 2 == 0) ? 1 : -1;
    }
  return hs;
}

template <Field F>
std::vector<long long> normalized_hilbert_function(const PresentedModule<F>& m, int bound) {
  auto hs = hilbert_series(m);
  auto start = hs.initial_degree(hs.low + static_cast<int>(hs.numerator.size()) + 1);
  if (!start) return {};
  return hs.values(*start, *start + bound - 1);
}

int krull_dim_of_monomial_ideal(const std::vector<std::vector<std::uint32_t>>& leads, std::size_t nvars) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& l : leads) {
    std::vector<std::size_t> sup;
    for (std::size_t i = 0; i < nvars; ++i)
      if (l[i] > 0) sup.push_back(i);
    if (sup.empty()) return -1;
    supports.push_back(std::move(sup));
  }
  std::vector<bool> chosen(nvars, false);
  int best = 0;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t i, int size) {
    if (size + static_cast<int>(nvars - i) <= best) return;
    if (i == nvars) {
      best = size;
      return;
    }
    chosen[i] = true;
    bool ok = true;
    for (const auto& sup : supports) {
      bool inside = std::all_of(sup.begin(), sup.end(), [&](std::size_t v) { return chosen[v]; });
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) dfs(i + 1, size + 1);
    chosen[i] = false;
    dfs(i + 1, size);
  };
  dfs(0, 0);
  return best;
}

template <Field F>
int krull_dim(const QRing<F>& s) {
  std::vector<std::vector<std::uint32_t>> leads;
  for (const auto& g : s->basis()) leads.push_back(g.leading_monomial().exponents());
  return krull_dim_of_monomial_ideal(leads, s->num_vars());
}

#define GALG_INSTANTIATE(F)                                                                   \
  template struct PresentedModule<F>;                                                         \
  template struct FreeResolution<F>;                                                          \
  template class Resolver<F>;                                                                 \
  template PresentedModule<F> prune(const PresentedModule<F>&);                               \
  template std::size_t min_generators(const PresentedModule<F>&);                             \
  template FreeResolution<F> free_resolution(const PresentedModule<F>&, std::size_t, bool);   \
  template std::size_t verify_resolution(const FreeResolution<F>&);                          \
  template BettiTable betti_numbers(const FreeResolution<F>&);                                \
  template HilbertSeries hilbert_series(const PresentedModule<F>&);                           \
  template HilbertSeries hilbert_series_from_resolution(const PresentedModule<F>&);           \
  template std::vector<long long> normalized_hilbert_function(const PresentedModule<F>&, int); \
  template int krull_dim(const QRing<F>&);

GALG_INSTANTIATE(PrimeField)
GALG_INSTANTIATE(RationalField)

}  // namespace galg
