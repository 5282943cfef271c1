#include <doctest.h>

#include "oracles.hpp"
#include "simred/bisimulation.hpp"
#include "simred/errors.hpp"
#include "simred/io.hpp"
#include "simred/random.hpp"
#include "simred/simulation.hpp"

using namespace simred;

namespace {

Lts make(std::size_t n, std::vector<std::string> labels, std::vector<Transition> transitions,
         StateId initial = 0) {
  return Lts(n, std::move(labels), std::move(transitions), initial);
}

// Grows a random seed set of pairs downward into a simulation: repeatedly
// drops pairs that violate the transfer condition. The result is always a
// simulation (possibly empty).
SimRelation random_closed_relation(const Lts& m, Rng& rng) {
  const std::size_t n = m.num_states();
  SimRelation rel(n);
  std::bernoulli_distribution keep(0.6);
  for (StateId s = 0; s < n; ++s)
    for (StateId t = 0; t < n; ++t)
      if (s == t || keep(rng)) rel.insert(s, t);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t) {
        if (!rel.contains(s, t)) continue;
        bool ok = true;
        for (LabelId a = 0; a < m.num_labels() && ok; ++a)
          for (StateId s2 : m.post(s, a)) {
            bool found = false;
            for (StateId t2 : m.post(t, a)) found = found || rel.contains(s2, t2);
            if (!found) ok = false;
          }
        if (!ok) {
          rel.erase(s, t);
          changed = true;
        }
      }
  }
  return rel;
}

bool subset(const SimRelation& x, const SimRelation& y) {
  for (StateId s = 0; s < x.num_states(); ++s)
    for (StateId t = 0; t < x.num_states(); ++t)
      if (x.contains(s, t) && !y.contains(s, t)) return false;
  return true;
}

}  // namespace

TEST_CASE("lts construction") {
  const Lts m = make(3, {"a", "b"}, {{0, 0, 1}, {0, 0, 1}, {1, 1, 2}, {0, 0, 2}});
  CHECK(m.num_transitions() == 3);
  CHECK(m.post(0, 0).size() == 2);
  CHECK(m.pre(2, 0).size() == 1);
  CHECK_FALSE(m.is_deterministic());
  CHECK_THROWS_AS(make(2, {"a"}, {{0, 1, 1}}), InputError);
  CHECK_THROWS_AS(make(2, {"a"}, {{0, 0, 2}}), InputError);
  CHECK_THROWS_AS(make(2, {"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(make(2, {"a"}, {}, 2), InputError);
}

TEST_CASE("naive similarity examples") {
  const Lts idle = make(3, {"a"}, {});
  CHECK(naive_similarity(idle) == SimRelation(3, true));

  const Lts one_step = make(2, {"a"}, {{0, 0, 0}});
  const SimRelation rel = naive_similarity(one_step);
  CHECK_FALSE(rel.contains(0, 1));
  CHECK(rel.contains(1, 0));

  // s -a-> u -a-> v (chain) and a separate a-loop on t
  const Lts chain = make(4, {"a"}, {{0, 0, 1}, {1, 0, 2}, {3, 0, 3}});
  const SimRelation c = naive_similarity(chain);
  CHECK(c.contains(0, 3));
  CHECK_FALSE(c.contains(3, 0));

  // three states: s -a-> u, u stuck, t -a-> t
  const Lts small = make(3, {"a"}, {{0, 0, 1}, {2, 0, 2}});
  const SimRelation s = naive_similarity(small);
  CHECK(s.contains(0, 2));
  CHECK_FALSE(s.contains(2, 0));
  CHECK(oracle::pairs_of(s) == oracle::exhaustive_similarity(small));
}

TEST_CASE("similarity equals the union of all simulations for n <= 3") {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 3;
    const Lts m = random_lts(rng, n, 1 + i % 2, rng() % (2 * n + 2));
    const auto expected = oracle::exhaustive_similarity(m);
    CHECK(oracle::pairs_of(naive_similarity(m)) == expected);
    CHECK(oracle::pairs_of(refined_similarity(m)) == expected);
  }
}

TEST_CASE("refined similarity agrees with the naive sweep") {
  Rng rng(43);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 15;
    const std::size_t labels = 1 + i % 3;
    const Lts m = random_lts(rng, n, labels, rng() % (2 * n + 1));
    const SimRelation naive = naive_similarity(m);
    const SimRelation refined = refined_similarity(m);
    REQUIRE(naive == refined);
    CHECK_FALSE(check_similarity_invariants(m, refined).has_value());
    CHECK(is_simulation(m, refined));
  }
  CHECK(refined_similarity(make(4, {"a", "b"}, {})) == SimRelation(4, true));
}

TEST_CASE("computed similarity contains every sampled simulation") {
  Rng rng(47);
  for (int i = 0; i < 40; ++i) {
    const Lts m = random_lts(rng, 3 + i % 8, 2, 2 * (3 + i % 8));
    const SimRelation sim = refined_similarity(m);
    for (int k = 0; k < 50; ++k) {
      const SimRelation r = random_closed_relation(m, rng);
      REQUIRE(is_simulation(m, r));
      CHECK(subset(r, sim));
    }
  }
}

TEST_CASE("similarity of larger instances keeps its invariants") {
  Rng rng(53);
  for (int i = 0; i < 5; ++i) {
    const Lts m = random_budget_lts(rng, 400, 2, 2);
    const SimRelation rel = refined_similarity(m);
    CHECK_FALSE(check_similarity_invariants(m, rel).has_value());
  }
  Rng drng(59);
  for (int i = 0; i < 5; ++i) {
    const Lts m = random_deterministic_lts(drng, 300, 2, 0.8);
    CHECK(refined_similarity(m) == naive_similarity(m));
  }
}

TEST_CASE("invariant checker rejects broken relations") {
  const Lts m = make(2, {"a"}, {{0, 0, 0}});
  SimRelation rel = refined_similarity(m);
  rel.insert(0, 1);
  CHECK(check_similarity_invariants(m, rel).has_value());
  SimRelation missing = refined_similarity(m);
  missing.erase(1, 1);
  CHECK(check_similarity_invariants(m, missing).has_value());
}

TEST_CASE("simulates") {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const Lts m = random_lts(rng, 1 + i % 10, 2, 2 * (1 + i % 10));
    CHECK(simulates(m, m));
  }
  const Lts stepping = make(1, {"a"}, {{0, 0, 0}});
  const Lts stuck = make(1, {"a"}, {});
  CHECK_FALSE(simulates(stepping, stuck));
  CHECK(simulates(stuck, stepping));
  // labels are merged by name, not by index
  const Lts by_b = make(1, {"b", "a"}, {{0, 1, 0}});
  CHECK(simulates(stepping, by_b));
  const Lts only_b = make(1, {"b"}, {{0, 0, 0}});
  CHECK_FALSE(simulates(stepping, only_b));
}

TEST_CASE("sim_equivalent") {
  const Lts m = make(3, {"a", "b"}, {{0, 0, 0}, {1, 1, 1}});
  CHECK(sim_equivalent(m, 2, 2));
  CHECK_FALSE(sim_equivalent(m, 0, 1));
  CHECK_THROWS_AS(sim_equivalent(m, 0, 3), InputError);

  Rng rng(67);
  for (int i = 0; i < 200; ++i) {
    const Lts d = random_deterministic_lts(rng, 2 + i % 12, 1 + i % 3);
    const SimRelation sim = refined_similarity(d);
    const Partition p = bisimulation_partition(d);
    for (StateId s = 0; s < d.num_states(); ++s)
      for (StateId t = 0; t < d.num_states(); ++t) CHECK(sim_equivalent(sim, s, t) == p.same_block(s, t));
  }
}

TEST_CASE("bisimulation partition") {
  CHECK(bisimulation_partition(make(4, {"a"}, {})).blocks.size() == 1);

  // 2-cycle 0 <-> 1 next to the unrolled 4-cycle 2 -> 3 -> 4 -> 5 -> 2
  const Lts cycles = make(6, {"a"}, {{0, 0, 1}, {1, 0, 0}, {2, 0, 3}, {3, 0, 4}, {4, 0, 5}, {5, 0, 2}});
  const Partition p = bisimulation_partition(cycles);
  CHECK(p.same_block(0, 2));
  CHECK(p.blocks.size() == 1);

  const Lts split = make(3, {"a", "b"}, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}});
  const Partition q = bisimulation_partition(split);
  CHECK(q.blocks.size() == 3);
  CHECK(format_partition(q) == "0\n1\n2\n");

  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const Lts m = random_lts(rng, 2 + i % 14, 1 + i % 3, 2 * (2 + i % 14));
    const Partition part = bisimulation_partition(m);
    CHECK_FALSE(check_partition_invariants(m, part).has_value());
    // bisimilarity refines simulation equivalence on any system
    const SimRelation sim = refined_similarity(m);
    for (const auto& block : part.blocks)
      for (StateId s : block) CHECK(sim_equivalent(sim, s, block.front()));
  }
  for (int i = 0; i < 200; ++i) {
    const Lts d = random_deterministic_lts(rng, 2 + i % 14, 1 + i % 3);
    CHECK(bisimulation_partition(d) == partition_from_equivalence(refined_similarity(d)));
  }
}

TEST_CASE("ndet gadget") {
  Rng rng(73);
  for (int i = 0; i < 30; ++i) {
    const Lts m = random_deterministic_lts(rng, 1 + i % 8, 2);
    const GadgetLts g = ndet_gadget(m, m);
    CHECK(sim_equivalent(g.lts, g.s, g.t));
  }
  const Lts stepping = make(1, {"a"}, {{0, 0, 0}});
  const Lts stuck = make(1, {"a"}, {});
  const GadgetLts g = ndet_gadget(stepping, stuck);
  CHECK(g.s == 2);
  CHECK(g.t == 3);
  CHECK(g.lts.num_transitions() == 4);
  CHECK(g.lts.post(g.s, 0).size() == 2);
  CHECK_FALSE(sim_equivalent(g.lts, g.s, g.t));

  // a fresh label is appended
  const GadgetLts fresh = ndet_gadget(stepping, stuck, "tau");
  CHECK(fresh.lts.labels().back() == "tau");
  CHECK_FALSE(sim_equivalent(fresh.lts, fresh.s, fresh.t));

  for (int i = 0; i < 500; ++i) {
    const Lts m1 = random_deterministic_lts(rng, 1 + i % 12, 1 + i % 2);
    const Lts m2 = random_deterministic_lts(rng, 1 + (i * 5) % 12, 1 + i % 2);
    const GadgetLts gadget = ndet_gadget(m1, m2);
    CHECK(sim_equivalent(gadget.lts, gadget.s, gadget.t) == simulates(m1, m2));
  }
  CHECK_THROWS_AS(ndet_gadget(make(1, {}, {}), make(1, {}, {})), InputError);
}

TEST_CASE("lts text format and relation output") {
  const std::string text = "lts 3 3 0\n(0, \"a\", 1)\n(1, \"b\", 2)\n(2, \"a\", 0)\n";
  const Lts m = parse_lts(text);
  CHECK(m.num_states() == 3);
  CHECK(m.labels() == std::vector<std::string>{"a", "b"});
  CHECK(write_lts(m) == text);

  // labels are ordered by name, so reading reorders transitions canonically
  const Lts unordered = parse_lts("lts 2 2 1\n(0, \"zeta\", 1)\n  (0,\"alpha\",0)  \n");
  CHECK(unordered.initial() == 1);
  CHECK(write_lts(unordered) == "lts 2 2 1\n(0, \"alpha\", 0)\n(0, \"zeta\", 1)\n");

  Rng rng(79);
  for (int i = 0; i < 50; ++i) {
    const Lts r = random_lts(rng, 1 + i % 9, 1 + i % 3, 3 * (1 + i % 9));
    const std::string once = write_lts(r);
    CHECK(write_lts(parse_lts(once)) == once);
    CHECK(refined_similarity(parse_lts(once)) == refined_similarity(r));
  }

  CHECK_THROWS_AS(parse_lts("lts 2 1 0\n(0, \"a\", 5)\n"), InputError);
  CHECK_THROWS_AS(parse_lts("lts 2 2 0\n(0, \"a\", 1)\n"), InputError);
  CHECK_THROWS_AS(parse_lts("lts 2 1 0\n(0, a, 1)\n"), InputError);
  CHECK_THROWS_AS(parse_lts("des (0, 1, 2)\n"), InputError);

  const Lts two = make(2, {"a"}, {{0, 0, 0}});
  CHECK(format_relation(refined_similarity(two)) == "(0, 0)\n(1, 0)\n(1, 1)\n");
}
