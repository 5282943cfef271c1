#include "simred/lts.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "simred/errors.hpp"

namespace simred {

Lts::Lts(std::size_t num_states, std::vector<std::string> labels,
         std::vector<Transition> transitions, StateId initial)
    : num_states_(num_states),
      labels_(std::move(labels)),
      transitions_(std::move(transitions)),
      initial_(initial) {
  if (num_states_ == 0) throw InputError("lts: at least one state is required");
  if (initial_ >= num_states_)
    throw InputError("lts: initial state " + std::to_string(initial_) + " out of range");
  {
    std::vector<std::string> sorted(labels_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("lts: duplicate label declaration");
  }
  for (const Transition& t : transitions_) {
    if (t.src >= num_states_ || t.dst >= num_states_)
      throw InputError("lts: transition (" + std::to_string(t.src) + ", " + std::to_string(t.dst) +
                       ") references a state out of range");
    if (t.label >= labels_.size())
      throw InputError("lts: transition label index " + std::to_string(t.label) + " undeclared");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  const std::size_t L = labels_.size();
  const std::size_t slots = num_states_ * L;
  post_offsets_.assign(slots + 1, 0);
  pre_offsets_.assign(slots + 1, 0);
  for (const Transition& t : transitions_) {
    ++post_offsets_[t.src * L + t.label + 1];
    ++pre_offsets_[t.dst * L + t.label + 1];
  }
  std::partial_sum(post_offsets_.begin(), post_offsets_.end(), post_offsets_.begin());
  std::partial_sum(pre_offsets_.begin(), pre_offsets_.end(), pre_offsets_.begin());
  post_targets_.resize(transitions_.size());
  pre_sources_.resize(transitions_.size());
  std::vector<std::size_t> pre_fill(pre_offsets_.begin(), pre_offsets_.end() - 1);
  // sorted order already groups post lists by (src, label)
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const Transition& t = transitions_[i];
    post_targets_[i] = t.dst;
    pre_sources_[pre_fill[t.dst * L + t.label]++] = t.src;
  }
}

std::optional<LabelId> Lts::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<LabelId>(i);
  return std::nullopt;
}

bool Lts::is_deterministic() const {
  for (std::size_t i = 1; i < transitions_.size(); ++i)
    if (transitions_[i].src == transitions_[i - 1].src && transitions_[i].label == transitions_[i - 1].label)
      return false;
  return true;
}

DisjointUnion disjoint_union(const Lts& first, const Lts& second) {
  std::vector<std::string> labels(first.labels());
  std::vector<LabelId> remap(second.num_labels());
  for (std::size_t i = 0; i < second.num_labels(); ++i) {
    const auto existing = first.label_index(second.labels()[i]);
    if (existing) {
      remap[i] = *existing;
    } else {
      remap[i] = static_cast<LabelId>(labels.size());
      labels.push_back(second.labels()[i]);
    }
  }
  const auto offset = static_cast<StateId>(first.num_states());
  std::vector<Transition> transitions(first.transitions());
  transitions.reserve(first.num_transitions() + second.num_transitions());
  for (const Transition& t : second.transitions())
    transitions.push_back({t.src + offset, remap[t.label], t.dst + offset});
  return {Lts(first.num_states() + second.num_states(), std::move(labels), std::move(transitions),
              first.initial()),
          offset};
}

}  // namespace simred
