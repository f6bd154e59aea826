#pragma once

// Buchberger engine over interned monomials. Module elements are stored as
// polynomials whose monomials carry a component index, so ideals are the
// rank-one case. Ring relations (a Groebner basis of the defining ideal of a
// quotient ring) act on every component.

#include <cstdint>
#include <vector>

#include "galg/polynomial.hpp"

namespace galg::detail {

struct EngineOrder {
  std::vector<std::vector<int>> rows;  // compared in sequence, larger value first
  std::vector<bool> row_shifted;       // rows that include the component degree shift
  bool revlex = true;                  // tie-break: revlex or lex
};

EngineOrder engine_order(const MonomialOrder& order, std::size_t nvars);
/// Compares the total weight of `eliminated` first, then the base order.
EngineOrder elimination_order(const MonomialOrder& base, std::size_t nvars, const std::vector<std::size_t>& eliminated);

struct ModuleLayout {
  std::size_t rank = 1;
  std::vector<int> shifts;  // degree of each basis vector
  std::vector<int> blocks;  // lower block compares larger; within a block term-over-position

  static ModuleLayout free(std::size_t rank, std::vector<int> shifts = {});
  static ModuleLayout position_over_term(std::size_t rank, std::vector<int> shifts = {});
};

class MonoTable {
 public:
  MonoTable(std::size_t nvars, EngineOrder order, std::vector<int> deg_weights, ModuleLayout layout);

  std::uint32_t intern(const std::int32_t* exps, std::uint32_t comp);
  /// exps(id) + delta in component `comp` (or id's own component when comp < 0).
  std::uint32_t mul(std::uint32_t id, const std::int32_t* delta, std::int32_t comp);
  std::uint32_t lcm(std::uint32_t a, std::uint32_t b, std::uint32_t comp);

  const std::int32_t* exps(std::uint32_t id) const { return &exps_[static_cast<std::size_t>(id) * n_]; }
  std::uint32_t comp(std::uint32_t id) const { return comp_[id]; }
  std::int64_t degree(std::uint32_t id) const { return deg_[id]; }
  std::uint64_t mask(std::uint32_t id) const { return mask_[id]; }
  std::size_t nvars() const { return n_; }
  std::size_t size() const { return comp_.size(); }
  const ModuleLayout& layout() const { return layout_; }

  /// >0 if a > b, <0 if a < b, 0 if equal.
  int compare(std::uint32_t a, std::uint32_t b) const;
  /// Monomial part of a divides monomial part of b (components ignored).
  bool divides(std::uint32_t a, std::uint32_t b) const;
  bool coprime(std::uint32_t a, std::uint32_t b) const;
  bool is_constant(std::uint32_t id) const { return mask_[id] == 0 && all_zero(id); }

 private:
  bool all_zero(std::uint32_t id) const;
  std::uint64_t hash(const std::int32_t* e, std::uint32_t comp) const;
  void grow();

  std::size_t n_;
  EngineOrder order_;
  std::vector<int> degw_;
  ModuleLayout layout_;
  std::vector<std::int32_t> exps_;
  std::vector<std::uint32_t> comp_;
  std::vector<std::int64_t> deg_;
  std::vector<std::int64_t> rowv_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint64_t> hash_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::int32_t> scratch_;
};

template <Field F>
class Engine {
 public:
  using Coeff = typename F::value_type;
  struct Poly {
    std::vector<std::uint32_t> mons;
    std::vector<Coeff> cs;
    bool empty() const { return mons.empty(); }
  };

  Engine(F field, std::size_t nvars, EngineOrder order, std::vector<int> deg_weights, ModuleLayout layout);

  /// Elements of a Groebner basis of the defining ideal; they reduce every component.
  void add_ring_relation(const Polynomial<F>& g);
  /// Queues an input generator (component i of v lands in component offset + i).
  void add_input(const ModuleVector<F>& v, std::size_t offset = 0);
  void add_input(Poly p);
  /// Loads elements already known to form a Groebner basis (no pairs are formed).
  void load_basis(const ModuleVector<F>& v, std::size_t offset = 0);

  Poly import(const ModuleVector<F>& v, std::size_t offset = 0);
  Poly import(const Polynomial<F>& p, std::uint32_t comp);
  ModuleVector<F> export_vector(const Poly& p, const RingPtr<F>& ring, std::size_t first, std::size_t count) const;

  /// Runs Buchberger to completion.
  void compute();
  /// Full normal form with respect to the current basis and the ring relations.
  Poly reduce(const Poly& p);

  bool homogeneous() const { return homogeneous_; }
  /// Active, interreduced, monic elements (call after compute()).
  std::vector<const Poly*> reduced_basis();
  /// Homogeneous inputs that were not in the span of lower-degree data; valid after compute().
  const std::vector<bool>& minimal_inputs() const { return input_minimal_; }
  std::size_t num_inputs() const { return inputs_.size(); }

  MonoTable& table() { return table_; }
  const F& field() const { return field_; }
  std::uint32_t lead_comp(const Poly& p) const { return table_.comp(p.mons.front()); }
  std::int64_t degree_of(const Poly& p) const;
  bool is_homogeneous(const Poly& p) const;

 private:
  struct Element {
    Poly poly;
    bool active = true;
  };
  struct Pair {
    std::uint32_t i;
    std::int32_t j;  // >= 0 basis index, < 0 ring relation -j-1
    std::uint32_t lcm;
    std::int64_t deg;
    bool alive = true;
  };

  void insert(Poly p);
  void update_pairs(std::uint32_t h);
  Poly spoly(const Pair& pr);
  Poly reduce_accumulated(bool tail_only_after_lead, std::int64_t skip = -1);
  void push_term(std::uint32_t id, const Coeff& c);
  void add_scaled(const Poly& g, std::size_t start, const std::int32_t* delta, std::int32_t comp, const Coeff& c);
  bool find_reducer(std::uint32_t m, bool is_ring_ok, std::int64_t skip, const Poly*& out, bool& ring_rel);
  void make_monic(Poly& p);
  void interreduce();

  F field_;
  MonoTable table_;
  std::vector<Poly> ring_;
  std::vector<Element> basis_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  std::vector<Pair> pairs_;
  std::vector<std::uint32_t> queue_;  // heap of pair indices
  std::vector<Poly> inputs_;
  std::vector<bool> input_minimal_;
  bool homogeneous_ = true;
  bool interreduced_ = false;

  std::vector<Coeff> acc_;
  std::vector<std::uint8_t> in_heap_;
  std::vector<std::uint32_t> heap_;
  std::vector<std::int32_t> delta_;
};

extern template class Engine<PrimeField>;
extern template class Engine<RationalField>;

}  // namespace galg::detail
