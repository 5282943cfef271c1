#include "simred/simulation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "simred/errors.hpp"

namespace simred {

SimRelation::SimRelation(std::size_t num_states, bool full)
    : n_(num_states), words_((num_states + 63) / 64), bits_(n_ * words_, 0) {
  if (!full || n_ == 0) return;
  const std::uint64_t tail = (n_ % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n_ % 64)) - 1);
  for (std::size_t s = 0; s < n_; ++s) {
    std::fill_n(bits_.begin() + static_cast<std::ptrdiff_t>(s * words_), words_, ~std::uint64_t{0});
    bits_[s * words_ + words_ - 1] = tail;
  }
}

std::size_t SimRelation::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

namespace {

// Some t' in post_a(t) with (s', t') in rel.
bool matched(const SimRelation& rel, std::span<const StateId> targets, StateId s_next) {
  for (StateId t_next : targets)
    if (rel.contains(s_next, t_next)) return true;
  return false;
}

bool transfer_holds(const Lts& m, const SimRelation& rel, StateId s, StateId t) {
  for (LabelId a = 0; a < m.num_labels(); ++a) {
    const auto t_post = m.post(t, a);
    for (StateId s_next : m.post(s, a))
      if (!matched(rel, t_post, s_next)) return false;
  }
  return true;
}

bool any_in_row(const SimRelation& rel, StateId row, std::span<const StateId> states) {
  for (StateId x : states)
    if (rel.contains(row, x)) return true;
  return false;
}

}  // namespace

SimRelation naive_similarity(const Lts& m) {
  const std::size_t n = m.num_states();
  SimRelation rel(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t)
        if (rel.contains(s, t) && !transfer_holds(m, rel, s, t)) {
          rel.erase(s, t);
          changed = true;
        }
  }
  return rel;
}

SimRelation refined_similarity(const Lts& m) {
  const std::size_t n = m.num_states();
  const std::size_t L = m.num_labels();
  SimRelation rel(n, true);
  if (n == 0) return rel;
  const std::size_t words = rel.words_per_row();

  // Pairs whose enabled labels are incompatible go first: (s, t) needs t to
  // enable every label s enables.
  {
    std::vector<std::vector<std::uint64_t>> enables(L, std::vector<std::uint64_t>(words, 0));
    for (StateId s = 0; s < n; ++s)
      for (LabelId a = 0; a < L; ++a)
        if (!m.post(s, a).empty()) enables[a][s >> 6] |= std::uint64_t{1} << (s & 63);
    for (StateId s = 0; s < n; ++s) {
      std::uint64_t* row = rel.row(s);
      for (LabelId a = 0; a < L; ++a)
        if (!m.post(s, a).empty())
          for (std::size_t w = 0; w < words; ++w) row[w] &= enables[a][w];
    }
  }

  std::vector<std::vector<StateId>> sources(L);
  for (const Transition& t : m.transitions())
    if (sources[t.label].empty() || sources[t.label].back() != t.src) sources[t.label].push_back(t.src);

  // pending[u * L + a] holds states w with no a-successor inside row u: for
  // every x with x -a-> u, the pair (x, w) has to go.
  std::vector<std::vector<StateId>> pending(n * L);
  std::vector<std::size_t> work;
  std::vector<char> queued(n * L, 0);
  auto schedule = [&](StateId u, LabelId a, StateId w) {
    const std::size_t key = static_cast<std::size_t>(u) * L + a;
    pending[key].push_back(w);
    if (!queued[key]) {
      queued[key] = 1;
      work.push_back(key);
    }
  };
  // (s, w) was just removed; predecessors of w may have lost their last
  // successor inside row s.
  auto on_removed = [&](StateId s, StateId w) {
    for (LabelId b = 0; b < L; ++b) {
      if (m.pre(s, b).empty()) continue;
      for (StateId w2 : m.pre(w, b))
        if (!any_in_row(rel, s, m.post(w2, b))) schedule(s, b, w2);
    }
  };
  std::vector<StateId> doomed;
  auto drain = [&] {
    while (!work.empty()) {
      const std::size_t key = work.back();
      work.pop_back();
      queued[key] = 0;
      // swap keeps both buffers' capacity alive across rounds
      doomed.clear();
      doomed.swap(pending[key]);
      const auto u = static_cast<StateId>(key / L);
      const auto a = static_cast<LabelId>(key % L);
      for (StateId x : m.pre(u, a))
        for (StateId w : doomed)
          if (rel.contains(x, w)) {
            rel.erase(x, w);
            on_removed(x, w);
          }
    }
  };

  // A state w can be scheduled for (u, a) at most twice: here, and by
  // on_removed at the moment its last a-successor leaves row u.
  for (StateId u = 0; u < n; ++u) {
    for (LabelId a = 0; a < L; ++a) {
      if (m.pre(u, a).empty()) continue;
      for (StateId w : sources[a])
        if (!any_in_row(rel, u, m.post(w, a))) schedule(u, a, w);
      drain();
    }
  }

  return rel;
}

bool is_simulation(const Lts& m, const SimRelation& rel) {
  const std::size_t n = m.num_states();
  for (StateId s = 0; s < n; ++s)
    for (StateId t = 0; t < n; ++t)
      if (rel.contains(s, t) && !transfer_holds(m, rel, s, t)) return false;
  return true;
}

std::optional<std::string> check_similarity_invariants(const Lts& m, const SimRelation& rel) {
  const std::size_t n = m.num_states();
  if (rel.num_states() != n) return "relation size does not match the state count";
  const std::size_t words = rel.words_per_row();
  for (StateId s = 0; s < n; ++s) {
    if (!rel.contains(s, s)) return "not reflexive at state " + std::to_string(s);
    const std::uint64_t* rs = rel.row(s);
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = rs[w]; bits != 0; bits &= bits - 1) {
        const auto t = static_cast<StateId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        if (!transfer_holds(m, rel, s, t))
          return "pair (" + std::to_string(s) + ", " + std::to_string(t) + ") violates the transfer condition";
        // transitivity: row(t) must be contained in row(s)
        const std::uint64_t* rt = rel.row(t);
        for (std::size_t v = 0; v < words; ++v)
          if ((rt[v] & ~rs[v]) != 0)
            return "not transitive through (" + std::to_string(s) + ", " + std::to_string(t) + ")";
      }
    }
  }
  return std::nullopt;
}

bool simulates(const Lts& m1, const Lts& m2) {
  const DisjointUnion joined = disjoint_union(m1, m2);
  const SimRelation rel = refined_similarity(joined.lts);
  return rel.contains(m1.initial(), m2.initial() + joined.offset);
}

bool sim_equivalent(const SimRelation& similarity, StateId s, StateId t) {
  const std::size_t n = similarity.num_states();
  if (s >= n || t >= n)
    throw InputError("unknown state " + std::to_string(s >= n ? s : t) + " (system has " +
                     std::to_string(n) + " states)");
  return similarity.contains(s, t) && similarity.contains(t, s);
}

bool sim_equivalent(const Lts& m, StateId s, StateId t) {
  if (s >= m.num_states() || t >= m.num_states())
    throw InputError("unknown state " + std::to_string(s >= m.num_states() ? s : t) + " (system has " +
                     std::to_string(m.num_states()) + " states)");
  return sim_equivalent(refined_similarity(m), s, t);
}

GadgetLts ndet_gadget(const Lts& m1, const Lts& m2, std::optional<std::string> label) {
  const DisjointUnion joined = disjoint_union(m1, m2);
  std::vector<std::string> labels = joined.lts.labels();
  if (!label) {
    if (labels.empty()) throw InputError("gadget: no label available for the fresh transitions");
    label = labels.front();
  }
  LabelId a = 0;
  if (const auto found = joined.lts.label_index(*label)) {
    a = *found;
  } else {
    a = static_cast<LabelId>(labels.size());
    labels.push_back(*label);
  }
  const auto n = joined.lts.num_states();
  const auto s = static_cast<StateId>(n);
  const auto t = static_cast<StateId>(n + 1);
  const StateId init1 = m1.initial();
  const StateId init2 = m2.initial() + joined.offset;
  std::vector<Transition> transitions = joined.lts.transitions();
  transitions.push_back({s, a, init1});
  transitions.push_back({s, a, init2});
  transitions.push_back({t, a, init2});
  return {Lts(n + 2, std::move(labels), std::move(transitions), s), s, t};
}

std::string format_relation(const SimRelation& rel) {
  std::ostringstream out;
  for (StateId s = 0; s < rel.num_states(); ++s)
    for (StateId t = 0; t < rel.num_states(); ++t)
      if (rel.contains(s, t)) out << '(' << s << ", " << t << ")\n";
  return out.str();
}

}  // namespace simred
