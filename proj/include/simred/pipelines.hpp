#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "simred/cnf.hpp"
#include "simred/dfa.hpp"
#include "simred/limits.hpp"

namespace simred {

/// How a two-automaton intersection question is decided.
enum class NeiPath {
  Product,     // breadth-first product search
  Similarity,  // alpha(a) simulated by alpha(complement(b))
  SimEq,       // the same question through the one-nondeterministic-state gadget
};

std::string to_string(NeiPath path);
/// Accepts "product", "sim", "simeq". Throws InputError otherwise.
NeiPath parse_nei_path(std::string_view name);

struct NeiSizes {
  std::size_t states_a = 0;
  std::size_t states_b = 0;
  std::size_t lts_states = 0;       // 0 on the product path
  std::size_t lts_transitions = 0;  // 0 on the product path
};

struct NeiOutcome {
  NeiPath path = NeiPath::Product;
  bool nonempty = false;
  std::optional<Word> witness;  // product path only
  NeiSizes sizes;
  double elapsed_ms = 0.0;
};

/// Throws InputError when the alphabets differ.
NeiOutcome nei_via_product(const Dfa& a, const Dfa& b);
NeiOutcome nei_via_similarity(const Dfa& a, const Dfa& b);
NeiOutcome nei_via_simeq(const Dfa& a, const Dfa& b);
NeiOutcome decide_nei(const Dfa& a, const Dfa& b, NeiPath path);

struct SatOutcome {
  NeiPath path = NeiPath::Similarity;
  bool satisfiable = false;
  std::optional<Assignment> assignment;
  std::optional<std::string> witness;  // "<assignment>|<clause bits>"
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  std::size_t first_states = 0;
  std::size_t second_states = 0;
  std::size_t lts_states = 0;
  double build_ms = 0.0;
  double decide_ms = 0.0;
  double witness_ms = 0.0;
};

/// Satisfiability through the split-language automata: the verdict comes
/// from `path`; on a non-empty intersection the witness is taken from the
/// product search and its first n bits decoded as the assignment.
SatOutcome sat_via_simulation(const CnfFormula& f, NeiPath path = NeiPath::Similarity,
                              const ScaleLimits& limits = {});

nlohmann::json to_json(const NeiOutcome& outcome);
nlohmann::json to_json(const SatOutcome& outcome);

}  // namespace simred
