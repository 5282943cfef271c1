#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simred/lts.hpp"
#include "simred/simulation.hpp"

namespace simred {

/// Blocks are ordered by their smallest state and list states ascending.
struct Partition {
  std::vector<std::vector<StateId>> blocks;
  std::vector<std::uint32_t> block_of;

  bool same_block(StateId s, StateId t) const { return block_of[s] == block_of[t]; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Bisimilarity classes via signature refinement: each round splits blocks
/// by the set of (label, successor block) pairs until the block count is
/// stable.
Partition bisimulation_partition(const Lts& m);

/// Checks that blocks cover the state space and that every block is stable
/// (all members share their (label, successor block) signature).
std::optional<std::string> check_partition_invariants(const Lts& m, const Partition& p);

/// Groups states by mutual similarity, in the same block order as
/// bisimulation_partition.
Partition partition_from_equivalence(const SimRelation& similarity);

/// One line per block, states separated by single spaces.
std::string format_partition(const Partition& p);

}  // namespace simred
