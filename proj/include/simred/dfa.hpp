#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simred/limits.hpp"
#include "simred/lts.hpp"
#include "simred/types.hpp"

namespace simred {

/// A finite sequence of alphabet tokens. The empty word is epsilon.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}

  /// Splits text into one-character tokens: "1101" -> {"1","1","0","1"}.
  static Word from_chars(std::string_view text);

  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::string& operator[](std::size_t i) const { return symbols_[i]; }

  /// Concatenation when every token is one character, otherwise
  /// space-separated tokens. Epsilon renders as the empty string.
  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::string> symbols_;
};

/// Deterministic finite automaton with a total transition table.
///
/// States are 0..n-1. The table is row-major: next(q, i) is
/// delta[q * |alphabet| + i], where i indexes alphabet().
class Dfa {
 public:
  /// Validates every invariant and throws InputError on violation:
  /// non-empty state set, distinct tokens that are not kCheckLabel, a full
  /// table with in-range targets, an in-range initial state.
  Dfa(std::vector<std::string> alphabet, std::vector<StateId> delta,
      std::vector<bool> accepting, StateId initial);

  std::size_t num_states() const { return accepting_.size(); }
  std::size_t num_symbols() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  StateId initial() const { return initial_; }
  bool is_accepting(StateId q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const { return accepting_; }
  StateId next(StateId q, std::size_t symbol) const {
    return delta_[q * alphabet_.size() + symbol];
  }
  std::span<const StateId> row(StateId q) const {
    return {delta_.data() + q * alphabet_.size(), alphabet_.size()};
  }
  const std::vector<StateId>& table() const { return delta_; }
  std::optional<std::size_t> symbol_index(std::string_view token) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<StateId> delta_;
  std::vector<bool> accepting_;
  StateId initial_;
};

/// Incremental construction of a possibly partial automaton. build() routes
/// every missing (state, symbol) entry to a fresh non-accepting sink, which
/// is only added when at least one entry is missing.
class DfaBuilder {
 public:
  DfaBuilder(std::vector<std::string> alphabet, std::size_t num_states);

  DfaBuilder& set_initial(StateId q);
  DfaBuilder& set_accepting(StateId q, bool accepting = true);
  /// Throws InputError for unknown tokens, out-of-range states, or a second
  /// target for an already defined (src, token).
  DfaBuilder& add_transition(StateId src, std::string_view token, StateId dst);
  DfaBuilder& add_transition(StateId src, std::size_t symbol, StateId dst);

  Dfa build() const;

 private:
  static constexpr StateId kUnset = static_cast<StateId>(-1);
  std::vector<std::string> alphabet_;
  std::size_t num_states_;
  std::vector<StateId> delta_;
  std::vector<bool> accepting_;
  StateId initial_ = 0;
};

/// Membership of w in L(a). Throws InputError naming the first unknown token
/// and its position.
bool run_word(const Dfa& a, const Word& w);

/// Same structure with accepting and non-accepting states swapped.
Dfa complement(const Dfa& a);

/// Shortest word accepted by every automaton, ties broken by the declared
/// symbol order; nullopt when the intersection is empty. Breadth-first over
/// the reachable part of the product only. Throws InputError on an empty
/// list or differing alphabets.
std::optional<Word> intersection_nonempty(std::span<const Dfa> automata);

/// L(a) is a subset of L(b), decided on the product with complement(b).
bool language_inclusion(const Dfa& a, const Dfa& b);

/// Shortest word in L(a) \ L(b), if any.
std::optional<Word> inclusion_counterexample(const Dfa& a, const Dfa& b);

/// States reachable from the initial state, ascending.
std::vector<StateId> reachable_states(const Dfa& a);

/// Canonical minimal total DFA for L(a): unreachable states dropped,
/// equivalent states merged (Hopcroft), classes numbered in breadth-first
/// discovery order from the initial state following the symbol order.
/// Equal languages over the same alphabet give equal results.
Dfa minimize(const Dfa& a);

/// All accepted words of length <= max_len. Throws ScaleError when the
/// number of candidate words exceeds limits.enumeration_words.
std::set<Word> enumerate_language(const Dfa& a, std::size_t max_len,
                                  const ScaleLimits& limits = {});

/// Embeds a into a deterministic LTS: the same transitions plus a
/// kCheckLabel step from each accepting state to a fresh state with index
/// num_states(). Labels are the alphabet followed by kCheckLabel.
Lts alpha_map(const Dfa& a);

}  // namespace simred
