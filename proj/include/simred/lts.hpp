#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simred/types.hpp"

namespace simred {

struct Transition {
  StateId src;
  LabelId label;
  StateId dst;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Labelled transition system with an immutable transition relation.
///
/// Transitions are kept sorted by (src, label, dst) without duplicates.
/// Successor and predecessor lists per (state, label) are indexed at
/// construction so post() and pre() are O(1) views.
class Lts {
 public:
  /// Throws InputError when a transition references an unknown state or
  /// label, labels repeat, or the initial state is out of range. Duplicate
  /// triples are collapsed.
  Lts(std::size_t num_states, std::vector<std::string> labels,
      std::vector<Transition> transitions, StateId initial);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_labels() const { return labels_.size(); }
  std::size_t num_transitions() const { return transitions_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  StateId initial() const { return initial_; }
  std::optional<LabelId> label_index(std::string_view label) const;

  std::span<const StateId> post(StateId s, LabelId a) const {
    const std::size_t k = static_cast<std::size_t>(s) * labels_.size() + a;
    return {post_targets_.data() + post_offsets_[k], post_offsets_[k + 1] - post_offsets_[k]};
  }
  std::span<const StateId> pre(StateId s, LabelId a) const {
    const std::size_t k = static_cast<std::size_t>(s) * labels_.size() + a;
    return {pre_sources_.data() + pre_offsets_[k], pre_offsets_[k + 1] - pre_offsets_[k]};
  }

  /// At most one successor per (state, label).
  bool is_deterministic() const;

  friend bool operator==(const Lts& x, const Lts& y) {
    return x.num_states_ == y.num_states_ && x.labels_ == y.labels_ &&
           x.transitions_ == y.transitions_ && x.initial_ == y.initial_;
  }

 private:
  std::size_t num_states_;
  std::vector<std::string> labels_;
  std::vector<Transition> transitions_;
  StateId initial_;

  std::vector<std::size_t> post_offsets_;
  std::vector<StateId> post_targets_;
  std::vector<std::size_t> pre_offsets_;
  std::vector<StateId> pre_sources_;
};

/// Result of placing two systems side by side: the first keeps its state
/// indices, the second is shifted by `offset`. Labels are the first system's
/// labels followed by the second's labels not already present.
struct DisjointUnion {
  Lts lts;
  StateId offset;
};

/// The initial state of the union is first.initial().
DisjointUnion disjoint_union(const Lts& first, const Lts& second);

}  // namespace simred
