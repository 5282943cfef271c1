#include "simred/bisimulation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace simred {
namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// (own block, sorted distinct (label, successor block) pairs)
void signature(const Lts& m, const std::vector<std::uint32_t>& block, StateId s,
               std::vector<std::uint64_t>& key) {
  key.clear();
  for (LabelId a = 0; a < m.num_labels(); ++a)
    for (StateId t : m.post(s, a)) key.push_back((std::uint64_t{a} << 32) | block[t]);
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  key.push_back(block[s]);
}

Partition from_block_ids(const std::vector<std::uint32_t>& ids) {
  // renumber by first occurrence so blocks are ordered by their least state
  Partition p;
  p.block_of.resize(ids.size());
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (StateId s = 0; s < ids.size(); ++s) {
    auto [it, inserted] = renumber.emplace(ids[s], static_cast<std::uint32_t>(renumber.size()));
    if (inserted) p.blocks.emplace_back();
    p.block_of[s] = it->second;
    p.blocks[it->second].push_back(s);
  }
  return p;
}

}  // namespace

Partition bisimulation_partition(const Lts& m) {
  const std::size_t n = m.num_states();
  std::vector<std::uint32_t> block(n, 0);
  std::size_t count = n == 0 ? 0 : 1;
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, KeyHash> ids;
  std::vector<std::uint32_t> next(n);
  std::vector<std::uint64_t> key;
  for (;;) {
    ids.clear();
    ids.reserve(count * 2);
    for (StateId s = 0; s < n; ++s) {
      signature(m, block, s, key);
      auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
      next[s] = it->second;
    }
    // blocks only ever split, so an unchanged count means a fixpoint
    const bool stable = ids.size() == count;
    block.swap(next);
    count = ids.size();
    if (stable) break;
  }
  return from_block_ids(block);
}

std::optional<std::string> check_partition_invariants(const Lts& m, const Partition& p) {
  const std::size_t n = m.num_states();
  if (p.block_of.size() != n) return "block_of does not cover the state space";
  std::size_t covered = 0;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) return "empty block " + std::to_string(b);
    for (StateId s : p.blocks[b]) {
      if (s >= n || p.block_of[s] != b) return "block_of disagrees with block " + std::to_string(b);
      ++covered;
    }
  }
  if (covered != n) return "blocks overlap or miss states";
  std::vector<std::uint64_t> reference, key;
  for (const auto& members : p.blocks) {
    signature(m, p.block_of, members.front(), reference);
    for (StateId s : members) {
      signature(m, p.block_of, s, key);
      if (key != reference)
        return "block of state " + std::to_string(members.front()) + " is unstable at state " +
               std::to_string(s);
    }
  }
  return std::nullopt;
}

Partition partition_from_equivalence(const SimRelation& similarity) {
  const std::size_t n = similarity.num_states();
  std::vector<std::uint32_t> ids(n);
  std::vector<StateId> leaders;
  for (StateId s = 0; s < n; ++s) {
    auto it = std::find_if(leaders.begin(), leaders.end(), [&](StateId l) {
      return similarity.contains(s, l) && similarity.contains(l, s);
    });
    if (it == leaders.end()) {
      ids[s] = static_cast<std::uint32_t>(leaders.size());
      leaders.push_back(s);
    } else {
      ids[s] = static_cast<std::uint32_t>(it - leaders.begin());
    }
  }
  return from_block_ids(ids);
}

std::string format_partition(const Partition& p) {
  std::ostringstream out;
  for (const auto& block : p.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace simred
