#include "simred/dfa.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "simred/errors.hpp"

namespace simred {

Word Word::from_chars(std::string_view text) {
  std::vector<std::string> symbols;
  symbols.reserve(text.size());
  for (char c : text) symbols.emplace_back(1, c);
  return Word(std::move(symbols));
}

std::string Word::str() const {
  const bool single = std::all_of(symbols_.begin(), symbols_.end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += symbols_[i];
  }
  return out;
}

Dfa::Dfa(std::vector<std::string> alphabet, std::vector<StateId> delta,
         std::vector<bool> accepting, StateId initial)
    : alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      accepting_(std::move(accepting)),
      initial_(initial) {
  const std::size_t n = accepting_.size();
  if (n == 0) throw InputError("dfa: at least one state is required");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) throw InputError("dfa: empty symbol token");
    if (alphabet_[i] == kCheckLabel)
      throw InputError("dfa: symbol token '" + alphabet_[i] + "' is reserved");
    for (std::size_t j = 0; j < i; ++j)
      if (alphabet_[i] == alphabet_[j])
        throw InputError("dfa: duplicate symbol token '" + alphabet_[i] + "'");
  }
  if (delta_.size() != n * alphabet_.size())
    throw InputError("dfa: transition table has " + std::to_string(delta_.size()) +
                     " entries, expected " + std::to_string(n * alphabet_.size()));
  for (StateId q : delta_)
    if (q >= n) throw InputError("dfa: transition target " + std::to_string(q) + " out of range");
  if (initial_ >= n) throw InputError("dfa: initial state " + std::to_string(initial_) + " out of range");
}

std::optional<std::size_t> Dfa::symbol_index(std::string_view token) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == token) return i;
  return std::nullopt;
}

DfaBuilder::DfaBuilder(std::vector<std::string> alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      delta_(num_states * alphabet_.size(), kUnset),
      accepting_(num_states, false) {}

DfaBuilder& DfaBuilder::set_initial(StateId q) {
  if (q >= num_states_) throw InputError("dfa: initial state " + std::to_string(q) + " out of range");
  initial_ = q;
  return *this;
}

DfaBuilder& DfaBuilder::set_accepting(StateId q, bool accepting) {
  if (q >= num_states_) throw InputError("dfa: accepting state " + std::to_string(q) + " out of range");
  accepting_[q] = accepting;
  return *this;
}

DfaBuilder& DfaBuilder::add_transition(StateId src, std::string_view token, StateId dst) {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == token) return add_transition(src, i, dst);
  throw InputError("dfa: unknown symbol '" + std::string(token) + "'");
}

DfaBuilder& DfaBuilder::add_transition(StateId src, std::size_t symbol, StateId dst) {
  if (src >= num_states_ || dst >= num_states_)
    throw InputError("dfa: transition " + std::to_string(src) + " -> " + std::to_string(dst) +
                     " references a state out of range");
  if (symbol >= alphabet_.size()) throw InputError("dfa: symbol index out of range");
  StateId& cell = delta_[src * alphabet_.size() + symbol];
  if (cell != kUnset && cell != dst)
    throw InputError("dfa: state " + std::to_string(src) + " has two targets on '" +
                     alphabet_[symbol] + "'");
  cell = dst;
  return *this;
}

Dfa DfaBuilder::build() const {
  const bool partial = std::find(delta_.begin(), delta_.end(), kUnset) != delta_.end();
  if (!partial) return Dfa(alphabet_, delta_, accepting_, initial_);

  const auto sink = static_cast<StateId>(num_states_);
  const std::size_t k = alphabet_.size();
  std::vector<StateId> delta(delta_);
  for (StateId& cell : delta)
    if (cell == kUnset) cell = sink;
  delta.insert(delta.end(), k, sink);
  std::vector<bool> accepting(accepting_);
  accepting.push_back(false);
  return Dfa(alphabet_, std::move(delta), std::move(accepting), initial_);
}

bool run_word(const Dfa& a, const Word& w) {
  StateId q = a.initial();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto sym = a.symbol_index(w[i]);
    if (!sym)
      throw InputError("word: unknown symbol '" + w[i] + "' at position " + std::to_string(i + 1));
    q = a.next(q, *sym);
  }
  return a.is_accepting(q);
}

Dfa complement(const Dfa& a) {
  std::vector<bool> accepting(a.accepting());
  accepting.flip();
  return Dfa(a.alphabet(), a.table(), std::move(accepting), a.initial());
}

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<StateId>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (StateId x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

std::string describe_alphabet(const std::vector<std::string>& alphabet) {
  std::string out = "{";
  for (std::size_t i = 0; i < alphabet.size(); ++i) out += (i ? " " : "") + alphabet[i];
  return out + "}";
}

void require_same_alphabet(std::span<const Dfa> automata) {
  for (std::size_t i = 1; i < automata.size(); ++i)
    if (automata[i].alphabet() != automata[0].alphabet())
      throw InputError("alphabet mismatch: " + describe_alphabet(automata[0].alphabet()) +
                       " vs " + describe_alphabet(automata[i].alphabet()));
}

}  // namespace

std::optional<Word> intersection_nonempty(std::span<const Dfa> automata) {
  if (automata.empty()) throw InputError("intersection: no automata given");
  require_same_alphabet(automata);
  const std::size_t k = automata.size();
  const std::size_t nsym = automata[0].num_symbols();

  struct Node {
    std::vector<StateId> tuple;
    std::size_t parent;
    std::size_t symbol;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::unordered_map<std::vector<StateId>, std::size_t, TupleHash> seen;

  auto all_accept = [&](const std::vector<StateId>& tuple) {
    for (std::size_t i = 0; i < k; ++i)
      if (!automata[i].is_accepting(tuple[i])) return false;
    return true;
  };
  auto word_to = [&](std::size_t idx) {
    std::vector<std::string> symbols;
    for (; nodes[idx].parent != kRoot; idx = nodes[idx].parent)
      symbols.push_back(automata[0].alphabet()[nodes[idx].symbol]);
    std::reverse(symbols.begin(), symbols.end());
    return Word(std::move(symbols));
  };

  std::vector<StateId> start(k);
  for (std::size_t i = 0; i < k; ++i) start[i] = automata[i].initial();
  seen.emplace(start, 0);
  nodes.push_back({std::move(start), kRoot, 0});
  if (all_accept(nodes[0].tuple)) return Word{};

  // FIFO over nodes in discovery order: each level is discovered in the
  // lexicographic order of its shortest paths.
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t sym = 0; sym < nsym; ++sym) {
      std::vector<StateId> next(k);
      for (std::size_t i = 0; i < k; ++i) next[i] = automata[i].next(nodes[head].tuple[i], sym);
      auto [it, inserted] = seen.emplace(next, nodes.size());
      if (!inserted) continue;
      nodes.push_back({std::move(next), head, sym});
      if (all_accept(nodes.back().tuple)) return word_to(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

std::optional<Word> inclusion_counterexample(const Dfa& a, const Dfa& b) {
  const Dfa pair[] = {a, complement(b)};
  return intersection_nonempty(pair);
}

bool language_inclusion(const Dfa& a, const Dfa& b) {
  return !inclusion_counterexample(a, b).has_value();
}

std::vector<StateId> reachable_states(const Dfa& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::vector<StateId> stack{a.initial()};
  seen[a.initial()] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId r : a.row(q))
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
  }
  std::vector<StateId> out;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (seen[q]) out.push_back(q);
  return out;
}

namespace {

// Hopcroft's partition refinement over a dense automaton (states 0..n-1,
// all reachable). Returns the block index of every state.
std::vector<std::uint32_t> hopcroft_blocks(std::size_t n, std::size_t k,
                                           const std::vector<StateId>& delta,
                                           const std::vector<bool>& accepting) {
  // inverse transitions, CSR by (target, symbol)
  std::vector<std::size_t> inv_off(n * k + 1, 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t c = 0; c < k; ++c) ++inv_off[delta[q * k + c] * k + c + 1];
  std::partial_sum(inv_off.begin(), inv_off.end(), inv_off.begin());
  std::vector<StateId> inv(n * k);
  {
    std::vector<std::size_t> fill(inv_off.begin(), inv_off.end() - 1);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t c = 0; c < k; ++c) inv[fill[delta[q * k + c] * k + c]++] = static_cast<StateId>(q);
  }

  std::vector<StateId> elems(n);
  std::vector<std::size_t> loc(n);
  std::vector<std::uint32_t> block_of(n);
  struct Block {
    std::size_t first, mid, end;
  };
  std::vector<Block> blocks;

  // initial split: accepting states first
  {
    std::size_t pos = 0;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t first = pos;
      for (std::size_t q = 0; q < n; ++q)
        if (accepting[q] == (pass == 0)) {
          elems[pos] = static_cast<StateId>(q);
          loc[q] = pos++;
        }
      if (pos > first) {
        for (std::size_t i = first; i < pos; ++i) block_of[elems[i]] = static_cast<std::uint32_t>(blocks.size());
        blocks.push_back({first, first, pos});
      }
    }
  }

  std::vector<std::pair<std::uint32_t, std::size_t>> work;
  std::vector<std::vector<bool>> in_work;  // [block][symbol]
  auto enqueue = [&](std::uint32_t b, std::size_t c) {
    if (in_work.size() <= b) in_work.resize(b + 1, std::vector<bool>(k, false));
    if (!in_work[b][c]) {
      in_work[b][c] = true;
      work.emplace_back(b, c);
    }
  };
  in_work.assign(blocks.size(), std::vector<bool>(k, false));
  if (blocks.size() == 2) {
    const std::uint32_t smaller =
        (blocks[0].end - blocks[0].first) <= (blocks[1].end - blocks[1].first) ? 0 : 1;
    for (std::size_t c = 0; c < k; ++c) enqueue(smaller, c);
  }

  std::vector<StateId> splitter;
  std::vector<std::uint32_t> touched;
  while (!work.empty()) {
    const auto [b, c] = work.back();
    work.pop_back();
    in_work[b][c] = false;

    splitter.assign(elems.begin() + static_cast<std::ptrdiff_t>(blocks[b].first),
                    elems.begin() + static_cast<std::ptrdiff_t>(blocks[b].end));
    touched.clear();
    for (StateId q : splitter) {
      for (std::size_t i = inv_off[q * k + c]; i < inv_off[q * k + c + 1]; ++i) {
        const StateId p = inv[i];
        Block& pb = blocks[block_of[p]];
        if (loc[p] < pb.mid) continue;  // already marked
        if (pb.mid == pb.first) touched.push_back(block_of[p]);
        const std::size_t target = pb.mid++;
        const StateId other = elems[target];
        std::swap(elems[target], elems[loc[p]]);
        loc[other] = loc[p];
        loc[p] = target;
      }
    }
    for (std::uint32_t y : touched) {
      Block& yb = blocks[y];
      if (yb.mid == yb.end) {
        yb.mid = yb.first;
        continue;
      }
      // marked part [first, mid) becomes a new block
      const auto fresh = static_cast<std::uint32_t>(blocks.size());
      const Block nb{yb.first, yb.first, yb.mid};
      yb.first = yb.mid;
      blocks.push_back(nb);
      for (std::size_t i = nb.first; i < nb.end; ++i) block_of[elems[i]] = fresh;
      const std::size_t fresh_size = nb.end - nb.first;
      const std::size_t rest_size = blocks[y].end - blocks[y].first;
      for (std::size_t d = 0; d < k; ++d) {
        if (in_work.size() > y && in_work[y][d])
          enqueue(fresh, d);
        else
          enqueue(fresh_size <= rest_size ? fresh : y, d);
      }
    }
  }
  return block_of;
}

}  // namespace

Dfa minimize(const Dfa& a) {
  const std::size_t k = a.num_symbols();
  const std::vector<StateId> reach = reachable_states(a);
  std::vector<StateId> dense(a.num_states(), 0);
  for (std::size_t i = 0; i < reach.size(); ++i) dense[reach[i]] = static_cast<StateId>(i);

  const std::size_t n = reach.size();
  std::vector<StateId> delta(n * k);
  std::vector<bool> accepting(n);
  for (std::size_t i = 0; i < n; ++i) {
    accepting[i] = a.is_accepting(reach[i]);
    for (std::size_t c = 0; c < k; ++c) delta[i * k + c] = dense[a.next(reach[i], c)];
  }
  const std::vector<std::uint32_t> block_of = hopcroft_blocks(n, k, delta, accepting);

  // canonical numbering: breadth-first over blocks from the initial block
  std::vector<StateId> representative;
  std::unordered_map<std::uint32_t, StateId> canon;
  std::deque<std::uint32_t> queue;
  std::vector<StateId> block_rep(n, 0);
  for (std::size_t i = 0; i < n; ++i) block_rep[block_of[i]] = static_cast<StateId>(i);

  const std::uint32_t start = block_of[dense[a.initial()]];
  canon.emplace(start, 0);
  queue.push_back(start);
  std::vector<StateId> out_delta;
  std::vector<bool> out_accepting;
  while (!queue.empty()) {
    const std::uint32_t blk = queue.front();
    queue.pop_front();
    const StateId rep = block_rep[blk];
    out_accepting.push_back(accepting[rep]);
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint32_t tb = block_of[delta[rep * k + c]];
      auto [it, inserted] = canon.emplace(tb, static_cast<StateId>(canon.size()));
      if (inserted) queue.push_back(tb);
      out_delta.push_back(it->second);
    }
  }
  return Dfa(a.alphabet(), std::move(out_delta), std::move(out_accepting), 0);
}

std::set<Word> enumerate_language(const Dfa& a, std::size_t max_len, const ScaleLimits& limits) {
  const std::size_t k = a.num_symbols();
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += level;
    if (total > limits.enumeration_words)
      throw ScaleError("enumerate_language: more than " + std::to_string(limits.enumeration_words) +
                       " words up to length " + std::to_string(max_len));
    if (k == 0) break;
    if (level > limits.enumeration_words / k + 1) level = limits.enumeration_words + 1;
    else level *= k;
  }

  std::set<Word> out;
  // every word of the current length together with the state it reaches
  std::vector<std::pair<std::vector<std::size_t>, StateId>> frontier{{{}, a.initial()}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& [symbols, q] : frontier) {
      if (!a.is_accepting(q)) continue;
      std::vector<std::string> tokens;
      for (std::size_t s : symbols) tokens.push_back(a.alphabet()[s]);
      out.emplace(std::move(tokens));
    }
    if (len == max_len || k == 0) break;
    std::vector<std::pair<std::vector<std::size_t>, StateId>> next;
    next.reserve(frontier.size() * k);
    for (const auto& [symbols, q] : frontier)
      for (std::size_t c = 0; c < k; ++c) {
        auto extended = symbols;
        extended.push_back(c);
        next.emplace_back(std::move(extended), a.next(q, c));
      }
    frontier = std::move(next);
  }
  return out;
}

Lts alpha_map(const Dfa& a) {
  const std::size_t n = a.num_states();
  const std::size_t k = a.num_symbols();
  std::vector<std::string> labels(a.alphabet());
  labels.emplace_back(kCheckLabel);
  std::vector<Transition> transitions;
  transitions.reserve(n * k + n);
  const auto top = static_cast<StateId>(n);
  for (StateId q = 0; q < n; ++q) {
    for (std::size_t c = 0; c < k; ++c)
      transitions.push_back({q, static_cast<LabelId>(c), a.next(q, c)});
    if (a.is_accepting(q)) transitions.push_back({q, static_cast<LabelId>(k), top});
  }
  return Lts(n + 1, std::move(labels), std::move(transitions), a.initial());
}

}  // namespace simred
