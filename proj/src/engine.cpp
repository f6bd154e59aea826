#include "galg/detail/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <limits>
#include <numeric>

#include "galg/budget.hpp"

namespace galg::detail {

EngineOrder engine_order(const MonomialOrder& order, std::size_t nvars) {
  EngineOrder eo;
  std::vector<int> w(nvars, 1);
  for (std::size_t i = 0; i < nvars; ++i) w[i] = order.weight(i);
  if (order.kind == OrderKind::lex) {
    eo.revlex = false;
  } else {
    eo.rows.push_back(w);
    eo.row_shifted.push_back(true);
    eo.revlex = true;
  }
  return eo;
}

EngineOrder elimination_order(const MonomialOrder& base, std::size_t nvars,
                              const std::vector<std::size_t>& eliminated) {
  EngineOrder eo = engine_order(base, nvars);
  std::vector<int> block(nvars, 0);
  for (auto i : eliminated) block[i] = base.weight(i);
  eo.rows.insert(eo.rows.begin(), block);
  eo.row_shifted.insert(eo.row_shifted.begin(), false);
  return eo;
}

ModuleLayout ModuleLayout::free(std::size_t rank, std::vector<int> shifts) {
  ModuleLayout l;
  l.rank = rank;
  l.shifts = shifts.empty() ? std::vector<int>(rank, 0) : std::move(shifts);
  l.blocks.assign(rank, 0);
  return l;
}

ModuleLayout ModuleLayout::position_over_term(std::size_t rank, std::vector<int> shifts) {
  ModuleLayout l = free(rank, std::move(shifts));
  std::iota(l.blocks.begin(), l.blocks.end(), 0);
  return l;
}

// ----------------------------------------------------------------- MonoTable

MonoTable::MonoTable(std::size_t nvars, EngineOrder order, std::vector<int> deg_weights, ModuleLayout layout)
    : n_(nvars), order_(std::move(order)), degw_(std::move(deg_weights)), layout_(std::move(layout)) {
  if (degw_.empty()) degw_.assign(n_, 1);
  if (layout_.shifts.size() != layout_.rank) layout_.shifts.resize(layout_.rank, 0);
  if (layout_.blocks.size() != layout_.rank) layout_.blocks.resize(layout_.rank, 0);
  slots_.assign(1u << 12, 0);
  scratch_.assign(n_, 0);
}

std::uint64_t MonoTable::hash(const std::int32_t* e, std::uint32_t comp) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(comp) * 0xff51afd7ed558ccdULL);
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= static_cast<std::uint64_t>(e[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 29;
  return h;
}

void MonoTable::grow() {
  std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
  const std::size_t mask = fresh.size() - 1;
  for (std::uint32_t id = 0; id < comp_.size(); ++id) {
    std::size_t s = hash_[id] & mask;
    while (fresh[s] != 0) s = (s + 1) & mask;
    fresh[s] = id + 1;
  }
  slots_.swap(fresh);
}

std::uint32_t MonoTable::intern(const std::int32_t* e, std::uint32_t comp) {
  assert(comp < layout_.rank);
  const std::uint64_t h = hash(e, comp);
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = h & mask;
  while (slots_[s] != 0) {
    std::uint32_t id = slots_[s] - 1;
    if (hash_[id] == h && comp_[id] == comp && std::memcmp(exps(id), e, n_ * sizeof(std::int32_t)) == 0) return id;
    s = (s + 1) & mask;
  }
  const auto id = static_cast<std::uint32_t>(comp_.size());
  slots_[s] = id + 1;
  exps_.insert(exps_.end(), e, e + n_);
  comp_.push_back(comp);
  std::int64_t d = layout_.shifts[comp];
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    assert(e[i] >= 0);
    d += static_cast<std::int64_t>(e[i]) * degw_[i];
    if (e[i] > 0) m |= 1ULL << (i & 63);
  }
  deg_.push_back(d);
  mask_.push_back(m);
  hash_.push_back(h);
  for (std::size_t r = 0; r < order_.rows.size(); ++r) {
    std::int64_t v = order_.row_shifted[r] ? layout_.shifts[comp] : 0;
    const auto& row = order_.rows[r];
    for (std::size_t i = 0; i < n_; ++i) v += static_cast<std::int64_t>(e[i]) * row[i];
    rowv_.push_back(v);
  }
  if (comp_.size() * 2 > slots_.size()) grow();
  return id;
}

std::uint32_t MonoTable::mul(std::uint32_t id, const std::int32_t* delta, std::int32_t comp) {
  const std::int32_t* e = exps(id);
  for (std::size_t i = 0; i < n_; ++i) scratch_[i] = e[i] + delta[i];
  return intern(scratch_.data(), comp < 0 ? comp_[id] : static_cast<std::uint32_t>(comp));
}

std::uint32_t MonoTable::lcm(std::uint32_t a, std::uint32_t b, std::uint32_t comp) {
  const std::int32_t* ea = exps(a);
  const std::int32_t* eb = exps(b);
  for (std::size_t i = 0; i < n_; ++i) scratch_[i] = std::max(ea[i], eb[i]);
  return intern(scratch_.data(), comp);
}

int MonoTable::compare(std::uint32_t a, std::uint32_t b) const {
  if (a == b) return 0;
  const int ba = layout_.blocks[comp_[a]];
  const int bb = layout_.blocks[comp_[b]];
  if (ba != bb) return ba < bb ? 1 : -1;
  const std::size_t nr = order_.rows.size();
  for (std::size_t r = 0; r < nr; ++r) {
    std::int64_t va = rowv_[a * nr + r], vb = rowv_[b * nr + r];
    if (va != vb) return va > vb ? 1 : -1;
  }
  const std::int32_t* ea = exps(a);
  const std::int32_t* eb = exps(b);
  if (order_.revlex) {
    for (std::size_t i = n_; i-- > 0;)
      if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
  } else {
    for (std::size_t i = 0; i < n_; ++i)
      if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
  }
  if (comp_[a] != comp_[b]) return comp_[a] < comp_[b] ? 1 : -1;
  return 0;
}

bool MonoTable::divides(std::uint32_t a, std::uint32_t b) const {
  if ((mask_[a] & ~mask_[b]) != 0) return false;
  const std::int32_t* ea = exps(a);
  const std::int32_t* eb = exps(b);
  for (std::size_t i = 0; i < n_; ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

bool MonoTable::coprime(std::uint32_t a, std::uint32_t b) const {
  if ((mask_[a] & mask_[b]) == 0) return true;
  const std::int32_t* ea = exps(a);
  const std::int32_t* eb = exps(b);
  for (std::size_t i = 0; i < n_; ++i)
    if (ea[i] > 0 && eb[i] > 0) return false;
  return true;
}

bool MonoTable::all_zero(std::uint32_t id) const {
  const std::int32_t* e = exps(id);
  for (std::size_t i = 0; i < n_; ++i)
    if (e[i] != 0) return false;
  return true;
}

// -------------------------------------------------------------------- Engine

template <Field F>
Engine<F>::Engine(F field, std::size_t nvars, EngineOrder order, std::vector<int> deg_weights, ModuleLayout layout)
    : field_(std::move(field)), table_(nvars, std::move(order), std::move(deg_weights), std::move(layout)) {
  by_comp_.resize(table_.layout().rank);
  delta_.assign(nvars, 0);
}

template <Field F>
typename Engine<F>::Poly Engine<F>::import(const Polynomial<F>& f, std::uint32_t comp) {
  Poly p;
  std::vector<std::int32_t> e(table_.nvars());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::int32_t>(t.mono[i]);
    p.mons.push_back(table_.intern(e.data(), comp));
    p.cs.push_back(t.coeff);
  }
  std::vector<std::size_t> idx(p.mons.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return table_.compare(p.mons[a], p.mons[b]) > 0; });
  Poly q;
  for (auto i : idx) {
    q.mons.push_back(p.mons[i]);
    q.cs.push_back(p.cs[i]);
  }
  return q;
}

template <Field F>
typename Engine<F>::Poly Engine<F>::import(const ModuleVector<F>& v, std::size_t offset) {
  std::vector<std::pair<std::uint32_t, Coeff>> terms;
  std::vector<std::int32_t> e(table_.nvars());
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (const auto& t : v[c].terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::int32_t>(t.mono[i]);
      terms.emplace_back(table_.intern(e.data(), static_cast<std::uint32_t>(offset + c)), t.coeff);
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return table_.compare(a.first, b.first) > 0; });
  Poly p;
  for (auto& [m, c] : terms) {
    p.mons.push_back(m);
    p.cs.push_back(std::move(c));
  }
  return p;
}

template <Field F>
ModuleVector<F> Engine<F>::export_vector(const Poly& p, const RingPtr<F>& ring, std::size_t first,
                                         std::size_t count) const {
  std::vector<std::vector<typename Polynomial<F>::Term>> comps(count);
  for (std::size_t k = 0; k < p.mons.size(); ++k) {
    std::uint32_t c = table_.comp(p.mons[k]);
    if (c < first || c >= first + count) continue;
    const std::int32_t* e = table_.exps(p.mons[k]);
    Monomial m(table_.nvars());
    for (std::size_t i = 0; i < table_.nvars(); ++i) m[i] = static_cast<std::uint32_t>(e[i]);
    comps[c - first].push_back({std::move(m), p.cs[k]});
  }
  ModuleVector<F> v;
  v.reserve(count);
  for (auto& terms : comps) v.emplace_back(ring, std::move(terms));
  return v;
}

template <Field F>
std::int64_t Engine<F>::degree_of(const Poly& p) const {
  std::int64_t d = std::numeric_limits<std::int64_t>::min();
  for (auto m : p.mons) d = std::max(d, table_.degree(m));
  return d;
}

template <Field F>
bool Engine<F>::is_homogeneous(const Poly& p) const {
  for (auto m : p.mons)
    if (table_.degree(m) != table_.degree(p.mons.front())) return false;
  return true;
}

template <Field F>
void Engine<F>::make_monic(Poly& p) {
  if (p.empty() || field_.is_one(p.cs.front())) return;
  auto inv = field_.inv(p.cs.front());
  for (auto& c : p.cs) c = field_.mul(c, inv);
}

template <Field F>
void Engine<F>::add_ring_relation(const Polynomial<F>& g) {
  if (g.is_zero()) return;
  Poly p = import(g, 0);
  make_monic(p);
  if (!is_homogeneous(p)) homogeneous_ = false;
  ring_.push_back(std::move(p));
}

template <Field F>
void Engine<F>::add_input(const ModuleVector<F>& v, std::size_t offset) {
  add_input(import(v, offset));
}

template <Field F>
void Engine<F>::add_input(Poly p) {
  if (!p.empty() && !is_homogeneous(p)) homogeneous_ = false;
  inputs_.push_back(std::move(p));
}

template <Field F>
void Engine<F>::load_basis(const ModuleVector<F>& v, std::size_t offset) {
  Poly p = import(v, offset);
  if (p.empty()) return;
  make_monic(p);
  auto idx = static_cast<std::uint32_t>(basis_.size());
  by_comp_[lead_comp(p)].push_back(idx);
  basis_.push_back({std::move(p), true});
}

template <Field F>
void Engine<F>::push_term(std::uint32_t id, const Coeff& c) {
  if (id >= acc_.size()) {
    std::size_t n = std::max<std::size_t>(table_.size(), id + 1) * 3 / 2 + 16;
    acc_.resize(n, field_.zero());
    in_heap_.resize(n, 0);
  }
  acc_[id] = field_.add(acc_[id], c);
  if (!in_heap_[id]) {
    in_heap_[id] = 1;
    heap_.push_back(id);
    std::push_heap(heap_.begin(), heap_.end(), [this](std::uint32_t a, std::uint32_t b) { return table_.compare(a, b) < 0; });
  }
}

template <Field F>
void Engine<F>::add_scaled(const Poly& g, std::size_t start, const std::int32_t* delta, std::int32_t comp,
                           const Coeff& c) {
  for (std::size_t k = start; k < g.mons.size(); ++k) {
    std::uint32_t id = table_.mul(g.mons[k], delta, comp);
    push_term(id, field_.mul(c, g.cs[k]));
  }
}

template <Field F>
bool Engine<F>::find_reducer(std::uint32_t m, bool ring_ok, std::int64_t skip, const Poly*& out, bool& ring_rel) {
  for (auto idx : by_comp_[table_.comp(m)]) {
    if (static_cast<std::int64_t>(idx) == skip) continue;
    const Poly& g = basis_[idx].poly;
    if (table_.divides(g.mons.front(), m)) {
      out = &g;
      ring_rel = false;
      return true;
    }
  }
  if (ring_ok) {
    for (const auto& r : ring_) {
      if (table_.divides(r.mons.front(), m)) {
        out = &r;
        ring_rel = true;
        return true;
      }
    }
  }
  return false;
}

template <Field F>
typename Engine<F>::Poly Engine<F>::reduce_accumulated(bool, std::int64_t skip) {
  Poly out;
  auto less = [this](std::uint32_t a, std::uint32_t b) { return table_.compare(a, b) < 0; };
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), less);
    std::uint32_t m = heap_.back();
    heap_.pop_back();
    in_heap_[m] = 0;
    Coeff c = acc_[m];
    acc_[m] = field_.zero();
    if (field_.is_zero(c)) continue;
    const Poly* g = nullptr;
    bool ring_rel = false;
    if (find_reducer(m, true, skip, g, ring_rel)) {
      const std::int32_t* em = table_.exps(m);
      const std::int32_t* eg = table_.exps(g->mons.front());
      for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] = em[i] - eg[i];
      // g is monic, so subtracting c * (m / lt g) * g cancels m exactly
      add_scaled(*g, 1, delta_.data(), ring_rel ? static_cast<std::int32_t>(table_.comp(m)) : -1, field_.neg(c));
    } else {
      out.mons.push_back(m);
      out.cs.push_back(std::move(c));
    }
  }
  return out;
}

template <Field F>
typename Engine<F>::Poly Engine<F>::reduce(const Poly& p) {
  for (std::size_t k = 0; k < p.mons.size(); ++k) push_term(p.mons[k], p.cs[k]);
  return reduce_accumulated(false);
}

template <Field F>
typename Engine<F>::Poly Engine<F>::spoly(const Pair& pr) {
  const Poly& f = basis_[pr.i].poly;
  const std::int32_t* el = table_.exps(pr.lcm);
  {
    const std::int32_t* ef = table_.exps(f.mons.front());
    for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] = el[i] - ef[i];
    add_scaled(f, 1, delta_.data(), -1, field_.one());
  }
  const bool ring_rel = pr.j < 0;
  const Poly& g = ring_rel ? ring_[static_cast<std::size_t>(-pr.j - 1)] : basis_[static_cast<std::size_t>(pr.j)].poly;
  el = table_.exps(pr.lcm);
  const std::int32_t* eg = table_.exps(g.mons.front());
  for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] = el[i] - eg[i];
  add_scaled(g, 1, delta_.data(), ring_rel ? static_cast<std::int32_t>(table_.comp(pr.lcm)) : -1,
             field_.neg(field_.one()));
  return reduce_accumulated(false);
}

template <Field F>
void Engine<F>::update_pairs(std::uint32_t h) {
  const std::uint32_t lt_h = basis_[h].poly.mons.front();
  const std::uint32_t c = table_.comp(lt_h);
  const bool ideal_case = table_.layout().rank == 1;

  struct Cand {
    std::int32_t j;
    std::uint32_t lcm;
    bool coprime;
    bool keep;
  };
  std::vector<Cand> cands;
  for (auto g : by_comp_[c]) {
    if (g == h || !basis_[g].active) continue;
    std::uint32_t lt_g = basis_[g].poly.mons.front();
    cands.push_back({static_cast<std::int32_t>(g), table_.lcm(lt_h, lt_g, c), ideal_case && table_.coprime(lt_h, lt_g), true});
  }
  for (std::size_t r = 0; r < ring_.size(); ++r) {
    std::uint32_t lt_r = ring_[r].mons.front();
    cands.push_back({-static_cast<std::int32_t>(r) - 1, table_.lcm(lt_h, lt_r, c), table_.coprime(lt_h, lt_r), true});
  }

  // M: drop pairs whose lcm is a proper multiple of another new lcm
  for (auto& a : cands) {
    for (const auto& b : cands) {
      if (b.lcm != a.lcm && table_.divides(b.lcm, a.lcm)) {
        a.keep = false;
        break;
      }
    }
  }
  // F: one representative per lcm; a coprime member eliminates the group
  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return cands[a].lcm < cands[b].lcm; });
  for (std::size_t s = 0; s < order.size();) {
    std::size_t e = s;
    bool any_coprime = false;
    while (e < order.size() && cands[order[e]].lcm == cands[order[s]].lcm) {
      any_coprime = any_coprime || cands[order[e]].coprime;
      ++e;
    }
    bool kept_one = false;
    for (std::size_t k = s; k < e; ++k) {
      auto& cd = cands[order[k]];
      if (any_coprime || kept_one) cd.keep = false;
      else if (cd.keep) kept_one = true;
    }
    s = e;
  }

  // B: old pairs made redundant by h
  for (auto& p : pairs_) {
    if (!p.alive || table_.comp(p.lcm) != c) continue;
    if (!table_.divides(lt_h, p.lcm)) continue;
    std::uint32_t lt_i = basis_[p.i].poly.mons.front();
    std::uint32_t lt_j = p.j >= 0 ? basis_[static_cast<std::size_t>(p.j)].poly.mons.front()
                                  : ring_[static_cast<std::size_t>(-p.j - 1)].mons.front();
    if (table_.lcm(lt_i, lt_h, c) != p.lcm && table_.lcm(lt_j, lt_h, c) != p.lcm) p.alive = false;
  }

  auto later = [this](std::uint32_t a, std::uint32_t b) {
    const Pair& pa = pairs_[a];
    const Pair& pb = pairs_[b];
    if (pa.deg != pb.deg) return pa.deg > pb.deg;
    return table_.compare(pa.lcm, pb.lcm) > 0;
  };
  for (const auto& cd : cands) {
    if (!cd.keep) continue;
    pairs_.push_back({h, cd.j, cd.lcm, table_.degree(cd.lcm), true});
    queue_.push_back(static_cast<std::uint32_t>(pairs_.size() - 1));
    std::push_heap(queue_.begin(), queue_.end(), later);
  }

  for (auto g : by_comp_[c]) {
    if (g == h || !basis_[g].active) continue;
    if (table_.divides(lt_h, basis_[g].poly.mons.front())) basis_[g].active = false;
  }
}

template <Field F>
void Engine<F>::insert(Poly p) {
  make_monic(p);
  auto idx = static_cast<std::uint32_t>(basis_.size());
  by_comp_[lead_comp(p)].push_back(idx);
  basis_.push_back({std::move(p), true});
  interreduced_ = false;
  check_basis_size(basis_.size());
  update_pairs(idx);
}

template <Field F>
void Engine<F>::compute() {
  std::vector<std::size_t> order(inputs_.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::int64_t> deg(inputs_.size());
  for (std::size_t i = 0; i < inputs_.size(); ++i)
    deg[i] = inputs_[i].empty() ? std::numeric_limits<std::int64_t>::min() : degree_of(inputs_[i]);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return deg[a] < deg[b]; });
  input_minimal_.assign(inputs_.size(), false);

  auto later = [this](std::uint32_t a, std::uint32_t b) {
    const Pair& pa = pairs_[a];
    const Pair& pb = pairs_[b];
    if (pa.deg != pb.deg) return pa.deg > pb.deg;
    return table_.compare(pa.lcm, pb.lcm) > 0;
  };
  std::size_t next = 0;
  std::size_t since_compact = 0;
  for (;;) {
    check_deadline();
    while (!queue_.empty() && !pairs_[queue_.front()].alive) {
      std::pop_heap(queue_.begin(), queue_.end(), later);
      queue_.pop_back();
    }
    const bool has_pair = !queue_.empty();
    const bool has_input = next < order.size();
    if (!has_pair && !has_input) break;
    if (has_pair && (!has_input || pairs_[queue_.front()].deg <= deg[order[next]])) {
      std::pop_heap(queue_.begin(), queue_.end(), later);
      Pair pr = pairs_[queue_.back()];
      queue_.pop_back();
      Poly r = spoly(pr);
      if (!r.empty()) insert(std::move(r));
    } else {
      std::size_t i = order[next++];
      if (inputs_[i].empty()) continue;
      Poly r = reduce(inputs_[i]);
      if (!r.empty()) {
        input_minimal_[i] = true;
        insert(std::move(r));
      }
    }
    if (++since_compact > 4096 && queue_.size() * 4 < pairs_.size()) {
      // drop processed and dead pairs; rebuild the heap over fresh indices
      std::vector<Pair> keep;
      keep.reserve(queue_.size());
      for (auto q : queue_)
        if (pairs_[q].alive) keep.push_back(pairs_[q]);
      pairs_.swap(keep);
      queue_.resize(pairs_.size());
      std::iota(queue_.begin(), queue_.end(), 0);
      std::make_heap(queue_.begin(), queue_.end(), later);
      since_compact = 0;
    }
  }
  // processed pairs are gone from the queue; mark them dead so B-criterion scans stay short
  for (auto& p : pairs_) p.alive = false;
  pairs_.clear();
  queue_.clear();
}

template <Field F>
void Engine<F>::interreduce() {
  for (std::uint32_t h = 0; h < basis_.size(); ++h) {
    if (!basis_[h].active) continue;
    Poly& p = basis_[h].poly;
    for (std::size_t k = 1; k < p.mons.size(); ++k) push_term(p.mons[k], p.cs[k]);
    Poly tail = reduce_accumulated(false, h);
    Poly fresh;
    fresh.mons.push_back(p.mons.front());
    fresh.cs.push_back(p.cs.front());
    fresh.mons.insert(fresh.mons.end(), tail.mons.begin(), tail.mons.end());
    fresh.cs.insert(fresh.cs.end(), tail.cs.begin(), tail.cs.end());
    p = std::move(fresh);
  }
  interreduced_ = true;
}

template <Field F>
std::vector<const typename Engine<F>::Poly*> Engine<F>::reduced_basis() {
  if (!interreduced_) interreduce();
  std::vector<const Poly*> out;
  for (const auto& e : basis_)
    if (e.active) out.push_back(&e.poly);
  std::sort(out.begin(), out.end(),
            [this](const Poly* a, const Poly* b) { return table_.compare(a->mons.front(), b->mons.front()) < 0; });
  return out;
}

template class Engine<PrimeField>;
template class Engine<RationalField>;

}  // namespace galg::detail
