#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simred/cnf.hpp"
#include "simred/dfa.hpp"
#include "simred/limits.hpp"

namespace simred {

/// Which half of the variables carries a clause's satisfaction duty.
enum class Half { First, Second };

/// Automaton over {0,1} accepting the words rho b_1..b_m of length n + m
/// such that, for every clause i, b_i selects this half (0 for First,
/// 1 for Second) only if clause i is satisfied by this half's variables
/// under rho. The other bit value is unconstrained.
///
/// States are (position, set of clauses satisfied so far by this half),
/// explored from the start and numbered in discovery order, plus a sink.
/// Throws ScaleError above limits.gadget_vars variables.
Dfa build_split_dfa(const CnfFormula& f, Half half, const ScaleLimits& limits = {});

struct StateBound {
  std::size_t first_states;
  std::size_t second_states;
  std::size_t bound;  // m * n * 2^(n/2)

  bool within() const { return first_states <= bound + 1 && second_states <= bound + 1; }
};

/// Minimized sizes of both split automata against m * n * 2^(n/2). The +1
/// allowance in within() covers the explicit sink of a total automaton.
/// Throws ContractError when m < 1 or n < 2.
StateBound state_bound_check(const CnfFormula& f, const ScaleLimits& limits = {});

struct WitnessWord {
  std::vector<bool> assignment_bits;
  std::vector<bool> clause_bits;

  Word to_word() const;
  /// "<assignment>|<clause bits>"
  std::string str() const;
};

/// Canonical word in both split languages for a satisfying rho: b_i = 0
/// when clause i is satisfied by the first half of the variables, otherwise
/// b_i = 1. Throws ContractError when rho does not satisfy f.
WitnessWord assignment_to_witness(const CnfFormula& f, const Assignment& rho);

}  // namespace simred
