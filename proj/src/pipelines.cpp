#include "simred/pipelines.hpp"

#include <chrono>

#include "simred/errors.hpp"
#include "simred/sat_gadget.hpp"
#include "simred/simulation.hpp"

namespace simred {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet() == b.alphabet()) return;
  auto list = [](const Dfa& d) {
    std::string out = "{";
    for (std::size_t i = 0; i < d.num_symbols(); ++i) out += (i ? " " : "") + d.alphabet()[i];
    return out + "}";
  };
  throw InputError("alphabet mismatch: " + list(a) + " vs " + list(b));
}

}  // namespace

std::string to_string(NeiPath path) {
  switch (path) {
    case NeiPath::Product: return "product";
    case NeiPath::Similarity: return "sim";
    case NeiPath::SimEq: return "simeq";
  }
  return "?";
}

NeiPath parse_nei_path(std::string_view name) {
  if (name == "product") return NeiPath::Product;
  if (name == "sim") return NeiPath::Similarity;
  if (name == "simeq") return NeiPath::SimEq;
  throw InputError("unknown path '" + std::string(name) + "' (expected product, sim or simeq)");
}

NeiOutcome nei_via_product(const Dfa& a, const Dfa& b) {
  const auto start = Clock::now();
  const Dfa pair[] = {a, b};
  NeiOutcome out;
  out.path = NeiPath::Product;
  out.witness = intersection_nonempty(pair);
  out.nonempty = out.witness.has_value();
  out.sizes = {a.num_states(), b.num_states(), 0, 0};
  out.elapsed_ms = ms_since(start);
  return out;
}

NeiOutcome nei_via_similarity(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const auto start = Clock::now();
  const Lts m1 = alpha_map(a);
  const Lts m2 = alpha_map(complement(b));
  NeiOutcome out;
  out.path = NeiPath::Similarity;
  // L(a) inside the complement of L(b) means the intersection is empty
  out.nonempty = !simulates(m1, m2);
  out.sizes = {a.num_states(), b.num_states(), m1.num_states() + m2.num_states(),
               m1.num_transitions() + m2.num_transitions()};
  out.elapsed_ms = ms_since(start);
  return out;
}

NeiOutcome nei_via_simeq(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const auto start = Clock::now();
  const GadgetLts gadget = ndet_gadget(alpha_map(a), alpha_map(complement(b)));
  NeiOutcome out;
  out.path = NeiPath::SimEq;
  out.nonempty = !sim_equivalent(gadget.lts, gadget.s, gadget.t);
  out.sizes = {a.num_states(), b.num_states(), gadget.lts.num_states(), gadget.lts.num_transitions()};
  out.elapsed_ms = ms_since(start);
  return out;
}

NeiOutcome decide_nei(const Dfa& a, const Dfa& b, NeiPath path) {
  switch (path) {
    case NeiPath::Product: return nei_via_product(a, b);
    case NeiPath::Similarity: return nei_via_similarity(a, b);
    case NeiPath::SimEq: return nei_via_simeq(a, b);
  }
  throw InputError("unknown path");
}

SatOutcome sat_via_simulation(const CnfFormula& f, NeiPath path, const ScaleLimits& limits) {
  SatOutcome out;
  out.path = path;
  out.num_vars = f.num_vars;
  out.num_clauses = f.clauses.size();

  auto start = Clock::now();
  const Dfa first = build_split_dfa(f, Half::First, limits);
  const Dfa second = build_split_dfa(f, Half::Second, limits);
  out.build_ms = ms_since(start);
  out.first_states = first.num_states();
  out.second_states = second.num_states();

  start = Clock::now();
  const NeiOutcome verdict = decide_nei(first, second, path);
  out.decide_ms = ms_since(start);
  out.lts_states = verdict.sizes.lts_states;
  out.satisfiable = verdict.nonempty;
  if (!out.satisfiable) return out;

  start = Clock::now();
  std::optional<Word> word = verdict.witness;
  if (!word) word = nei_via_product(first, second).witness;
  out.witness_ms = ms_since(start);
  if (!word) throw std::logic_error("decision paths disagree on the split automata");

  Assignment rho(f.num_vars);
  std::string text;
  for (std::size_t i = 0; i < word->size(); ++i) {
    if (i < f.num_vars) rho[i] = (*word)[i] == "1";
    if (i == f.num_vars) text += '|';
    text += (*word)[i];
  }
  if (word->size() == f.num_vars) text += '|';
  out.assignment = std::move(rho);
  out.witness = std::move(text);
  return out;
}

nlohmann::json to_json(const NeiOutcome& outcome) {
  nlohmann::json doc{
      {"problem", "nei"},
      {"path", to_string(outcome.path)},
      {"verdict", outcome.nonempty ? "NON-EMPTY" : "EMPTY"},
      {"sizes",
       {{"states_a", outcome.sizes.states_a},
        {"states_b", outcome.sizes.states_b},
        {"lts_states", outcome.sizes.lts_states},
        {"lts_transitions", outcome.sizes.lts_transitions}}},
      {"timings", {{"total_ms", outcome.elapsed_ms}}},
  };
  if (outcome.witness) doc["witness"] = outcome.witness->str();
  return doc;
}

nlohmann::json to_json(const SatOutcome& outcome) {
  nlohmann::json doc{
      {"problem", "sat"},
      {"path", to_string(outcome.path)},
      {"verdict", outcome.satisfiable ? "SAT" : "UNSAT"},
      {"sizes",
       {{"variables", outcome.num_vars},
        {"clauses", outcome.num_clauses},
        {"first_states", outcome.first_states},
        {"second_states", outcome.second_states},
        {"lts_states", outcome.lts_states}}},
      {"timings",
       {{"build_ms", outcome.build_ms}, {"decide_ms", outcome.decide_ms}, {"witness_ms", outcome.witness_ms}}},
  };
  if (outcome.witness) doc["witness"] = *outcome.witness;
  if (outcome.assignment) doc["assignment"] = assignment_literals(*outcome.assignment);
  return doc;
}

}  // namespace simred
