#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "simred/cnf.hpp"
#include "simred/dfa.hpp"
#include "simred/lts.hpp"

namespace simred {

using Rng = std::mt19937_64;

/// Uniform random total DFA over the first `num_symbols` of {a, b, c, ...};
/// each state accepting with probability `accept_probability`.
Dfa random_dfa(Rng& rng, std::size_t num_states, std::size_t num_symbols,
               double accept_probability = 0.3);

/// Random LTS over labels {a, b, ...} with `num_transitions` uniformly drawn
/// triples (duplicates collapse, so the result may have fewer).
Lts random_lts(Rng& rng, std::size_t num_states, std::size_t num_labels,
               std::size_t num_transitions);

/// Random deterministic LTS: each (state, label) gets a successor with
/// probability `density`, drawn uniformly.
Lts random_deterministic_lts(Rng& rng, std::size_t num_states, std::size_t num_labels,
                             double density = 0.7);

/// Benchmark family: every state draws `out_degree` (label, target) pairs
/// uniformly, giving about out_degree * n transitions.
Lts random_budget_lts(Rng& rng, std::size_t num_states, std::size_t num_labels,
                      std::size_t out_degree);

/// Random CNF with clause widths in [1, max_width] over distinct variables.
CnfFormula random_cnf(Rng& rng, std::uint32_t num_vars, std::size_t num_clauses,
                      std::size_t max_width = 3);

}  // namespace simred
