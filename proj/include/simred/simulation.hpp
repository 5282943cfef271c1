#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simred/lts.hpp"
#include "simred/types.hpp"

namespace simred {

/// A relation over the states of one LTS, stored as an n x n bit table.
/// contains(s, t) reads "t simulates s" when the relation is a similarity.
class SimRelation {
 public:
  explicit SimRelation(std::size_t num_states, bool full = false);

  std::size_t num_states() const { return n_; }
  bool contains(StateId s, StateId t) const {
    return (bits_[s * words_ + (t >> 6)] >> (t & 63)) & 1u;
  }
  void insert(StateId s, StateId t) { bits_[s * words_ + (t >> 6)] |= std::uint64_t{1} << (t & 63); }
  void erase(StateId s, StateId t) { bits_[s * words_ + (t >> 6)] &= ~(std::uint64_t{1} << (t & 63)); }

  /// Number of pairs.
  std::size_t size() const;

  /// Row of s as packed words: bit t is set iff contains(s, t).
  const std::uint64_t* row(StateId s) const { return bits_.data() + s * words_; }
  std::uint64_t* row(StateId s) { return bits_.data() + s * words_; }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const SimRelation&, const SimRelation&) = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Largest simulation by repeated row-major sweeps over S x S, deleting
/// violating pairs until a full sweep deletes nothing. Quadratic memory and
/// intended for small systems and as a reference.
SimRelation naive_similarity(const Lts& m);

/// Largest simulation by worklist refinement: starting from the pairs whose
/// enabled labels are compatible, a deleted pair only re-examines the
/// predecessor pairs it can invalidate.
SimRelation refined_similarity(const Lts& m);

/// Whether `rel` satisfies the simulation transfer condition pair by pair.
bool is_simulation(const Lts& m, const SimRelation& rel);

/// Reflexive, transitive and closed under the transfer condition. Returns a
/// description of the first violation, or nullopt.
std::optional<std::string> check_similarity_invariants(const Lts& m, const SimRelation& rel);

/// m1's initial state is simulated by m2's initial state in their disjoint
/// union over the union of both label sets.
bool simulates(const Lts& m1, const Lts& m2);

/// s and t simulate each other. Throws InputError for unknown states.
bool sim_equivalent(const Lts& m, StateId s, StateId t);
bool sim_equivalent(const SimRelation& similarity, StateId s, StateId t);

/// Two systems joined under two fresh states s and t with transitions
/// s -a-> init(m1), s -a-> init(m2), t -a-> init(m2).
/// In the result, s and t are simulation equivalent iff init(m2) simulates
/// init(m1).
struct GadgetLts {
  Lts lts;
  StateId s;
  StateId t;
};

/// `label` defaults to the first label of m1 (then of m2). A label present
/// in neither system is added as a new label. Throws InputError when no
/// label is available at all.
GadgetLts ndet_gadget(const Lts& m1, const Lts& m2,
                      std::optional<std::string> label = std::nullopt);

/// One "(s, t)" line per pair, sorted lexicographically.
std::string format_relation(const SimRelation& rel);

}  // namespace simred
