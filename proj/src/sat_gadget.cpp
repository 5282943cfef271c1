#include "simred/sat_gadget.hpp"

#include <array>
#include <deque>
#include <map>

#include "simred/errors.hpp"

namespace simred {

Dfa build_split_dfa(const CnfFormula& f, Half half, const ScaleLimits& limits) {
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  if (n > limits.gadget_vars)
    throw ScaleError("split automaton: " + std::to_string(n) + " variables exceed the cap of " +
                     std::to_string(limits.gadget_vars));

  // clauses made true by reading `value` for variable index i
  std::vector<std::vector<bool>> makes_true[2];
  for (int value = 0; value < 2; ++value) {
    makes_true[value].assign(n, std::vector<bool>(m, false));
    for (std::size_t j = 0; j < m; ++j)
      for (const Literal& lit : f.clauses[j])
        if (lit.positive == (value == 1)) makes_true[value][lit.var - 1][j] = true;
  }
  const std::size_t lo = half == Half::First ? 0 : n / 2;
  const std::size_t hi = half == Half::First ? n / 2 : n;
  // the clause bit value that hands clause j to this half
  const int duty_bit = half == Half::First ? 0 : 1;

  using Key = std::pair<std::size_t, std::vector<bool>>;
  std::map<Key, StateId> ids;
  std::deque<Key> queue;
  std::vector<std::array<StateId, 2>> delta;
  std::vector<bool> accepting;
  constexpr StateId kSink = static_cast<StateId>(-1);

  auto intern = [&](Key key) {
    auto [it, inserted] = ids.emplace(key, static_cast<StateId>(ids.size()));
    if (inserted) queue.push_back(std::move(key));
    return it->second;
  };
  intern({0, std::vector<bool>(m, false)});
  while (!queue.empty()) {
    const Key key = queue.front();
    queue.pop_front();
    const auto& [pos, satisfied] = key;
    std::array<StateId, 2> row{kSink, kSink};
    for (int bit = 0; bit < 2; ++bit) {
      if (pos < n) {
        std::vector<bool> next = satisfied;
        if (pos >= lo && pos < hi)
          for (std::size_t j = 0; j < m; ++j)
            if (makes_true[bit][pos][j]) next[j] = true;
        row[bit] = intern({pos + 1, std::move(next)});
      } else if (pos < n + m) {
        const std::size_t clause = pos - n;
        if (bit != duty_bit || satisfied[clause]) row[bit] = intern({pos + 1, satisfied});
      }
    }
    delta.push_back(row);
    accepting.push_back(pos == n + m);
  }

  const auto sink = static_cast<StateId>(delta.size());
  std::vector<StateId> table;
  table.reserve((delta.size() + 1) * 2);
  for (const auto& row : delta)
    for (StateId q : row) table.push_back(q == kSink ? sink : q);
  table.push_back(sink);
  table.push_back(sink);
  accepting.push_back(false);
  return Dfa({"0", "1"}, std::move(table), std::move(accepting), 0);
}

StateBound state_bound_check(const CnfFormula& f, const ScaleLimits& limits) {
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  if (m < 1 || n < 2) throw ContractError("state_bound_check needs at least one clause and two variables");
  if (n / 2 >= 48) throw ScaleError("state_bound_check: bound overflows");
  StateBound result{};
  result.first_states = minimize(build_split_dfa(f, Half::First, limits)).num_states();
  result.second_states = minimize(build_split_dfa(f, Half::Second, limits)).num_states();
  result.bound = m * n * (std::size_t{1} << (n / 2));
  return result;
}

Word WitnessWord::to_word() const {
  std::vector<std::string> symbols;
  for (bool b : assignment_bits) symbols.emplace_back(b ? "1" : "0");
  for (bool b : clause_bits) symbols.emplace_back(b ? "1" : "0");
  return Word(std::move(symbols));
}

std::string WitnessWord::str() const {
  std::string out;
  for (bool b : assignment_bits) out += b ? '1' : '0';
  out += '|';
  for (bool b : clause_bits) out += b ? '1' : '0';
  return out;
}

WitnessWord assignment_to_witness(const CnfFormula& f, const Assignment& rho) {
  if (rho.size() != f.num_vars)
    throw ContractError("assignment has " + std::to_string(rho.size()) + " values for " +
                        std::to_string(f.num_vars) + " variables");
  if (!satisfies(f, rho)) throw ContractError("assignment does not satisfy the formula");
  const std::uint32_t half = f.num_vars / 2;
  WitnessWord w{rho, {}};
  for (const Clause& c : f.clauses) {
    bool first_half = false;
    for (const Literal& lit : c)
      if (lit.var <= half && rho[lit.var - 1] == lit.positive) first_half = true;
    w.clause_bits.push_back(!first_half);
  }
  return w;
}

}  // namespace simred
