#include "simred/random.hpp"

#include <algorithm>
#include <numeric>

namespace simred {
namespace {

std::vector<std::string> letters(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

StateId pick(Rng& rng, std::size_t n) {
  return static_cast<StateId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

}  // namespace

Dfa random_dfa(Rng& rng, std::size_t num_states, std::size_t num_symbols, double accept_probability) {
  std::bernoulli_distribution accept(accept_probability);
  std::vector<StateId> delta(num_states * num_symbols);
  for (StateId& q : delta) q = pick(rng, num_states);
  std::vector<bool> accepting(num_states);
  for (std::size_t q = 0; q < num_states; ++q) accepting[q] = accept(rng);
  return Dfa(letters(num_symbols), std::move(delta), std::move(accepting), 0);
}

Lts random_lts(Rng& rng, std::size_t num_states, std::size_t num_labels, std::size_t num_transitions) {
  std::vector<Transition> transitions;
  transitions.reserve(num_transitions);
  for (std::size_t i = 0; i < num_transitions; ++i) {
    const StateId src = pick(rng, num_states);
    const auto label = static_cast<LabelId>(pick(rng, num_labels));
    transitions.push_back({src, label, pick(rng, num_states)});
  }
  return Lts(num_states, letters(num_labels), std::move(transitions), 0);
}

Lts random_deterministic_lts(Rng& rng, std::size_t num_states, std::size_t num_labels, double density) {
  std::bernoulli_distribution present(density);
  std::vector<Transition> transitions;
  for (StateId s = 0; s < num_states; ++s)
    for (LabelId a = 0; a < num_labels; ++a)
      if (present(rng)) transitions.push_back({s, a, pick(rng, num_states)});
  return Lts(num_states, letters(num_labels), std::move(transitions), 0);
}

Lts random_budget_lts(Rng& rng, std::size_t num_states, std::size_t num_labels, std::size_t out_degree) {
  std::vector<Transition> transitions;
  transitions.reserve(num_states * out_degree);
  for (StateId s = 0; s < num_states; ++s)
    for (std::size_t i = 0; i < out_degree; ++i) {
      const auto label = static_cast<LabelId>(pick(rng, num_labels));
      transitions.push_back({s, label, pick(rng, num_states)});
    }
  return Lts(num_states, letters(num_labels), std::move(transitions), 0);
}

CnfFormula random_cnf(Rng& rng, std::uint32_t num_vars, std::size_t num_clauses, std::size_t max_width) {
  std::vector<Clause> clauses;
  std::vector<std::uint32_t> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 1u);
  std::bernoulli_distribution sign(0.5);
  const std::size_t widest = std::min<std::size_t>(max_width, num_vars);
  if (widest == 0) return make_formula(num_vars, {});
  for (std::size_t j = 0; j < num_clauses; ++j) {
    const std::size_t width = std::uniform_int_distribution<std::size_t>(1, widest)(rng);
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause c;
    for (std::size_t i = 0; i < width; ++i) c.push_back({vars[i], sign(rng)});
    clauses.push_back(std::move(c));
  }
  return make_formula(num_vars, std::move(clauses));
}

}  // namespace simred
