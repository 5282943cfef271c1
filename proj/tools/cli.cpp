#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simred/bench.hpp"
#include "simred/bisimulation.hpp"
#include "simred/cnf.hpp"
#include "simred/dfa.hpp"
#include "simred/errors.hpp"
#include "simred/io.hpp"
#include "simred/pipelines.hpp"
#include "simred/sat_gadget.hpp"
#include "simred/simulation.hpp"

namespace simred {
namespace {

using nlohmann::json;

std::string word_text(const Word& w) { return w.empty() ? "\xCE\xB5" : w.str(); }

Dfa load_dfa(const std::string& path) { return parse_dfa(read_file(path)); }
Lts load_lts(const std::string& path) { return parse_lts(read_file(path)); }
CnfFormula load_cnf(const std::string& path) { return parse_dimacs(read_file(path)); }

StateId state_arg(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("expected a state index, got '" + text + "'");
  const unsigned long long v = std::stoull(text);
  if (v > 0xFFFFFFFFull) throw InputError("state index " + text + " out of range");
  return static_cast<StateId>(v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulation, bisimulation and automata-intersection reductions", "simred"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit machine-readable JSON");

  std::string file_a, file_b, nei_path, sat_path;
  std::string state_s, state_t;
  int half = 1;
  bool minimized = false;
  std::string family = "random-lts";
  std::vector<std::size_t> sizes{2000, 4000, 8000, 16000};
  unsigned reps = 5;
  std::uint64_t seed = 1;

  auto* nei = app.add_subcommand("nei", "Is the intersection of two DFA languages non-empty?");
  nei->add_option("a", file_a, "First DFA file")->required();
  nei->add_option("b", file_b, "Second DFA file")->required();
  nei->add_option("--path", nei_path, "product | sim | simeq")->default_val("product");

  auto* sat = app.add_subcommand("sat", "Decide a DIMACS formula through the split-language automata");
  sat->add_option("formula", file_a, "DIMACS CNF file")->required();
  sat->add_option("--path", sat_path, "sim | simeq | product")->default_val("sim");

  auto* inclusion = app.add_subcommand("inclusion", "Is L(a) contained in L(b)?");
  inclusion->add_option("a", file_a)->required();
  inclusion->add_option("b", file_b)->required();

  auto* simulate = app.add_subcommand("simulate", "Is the initial state of m1 simulated by that of m2?");
  simulate->add_option("m1", file_a)->required();
  simulate->add_option("m2", file_b)->required();

  auto* simeq = app.add_subcommand("simeq", "Are two states simulation equivalent?");
  simeq->add_option("lts", file_a)->required();
  simeq->add_option("s", state_s)->required();
  simeq->add_option("t", state_t)->required();

  auto* similarity = app.add_subcommand("similarity", "Print the similarity relation");
  similarity->add_option("lts", file_a)->required();

  auto* bisim = app.add_subcommand("bisim", "Print the bisimulation partition");
  bisim->add_option("lts", file_a)->required();

  auto* alpha = app.add_subcommand("alpha", "Embed a DFA into an LTS with acceptance steps");
  alpha->add_option("dfa", file_a)->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "Canonical minimal DFA");
  minimize_cmd->add_option("dfa", file_a)->required();

  auto* gadget = app.add_subcommand("gadget", "Split-language DFA of a DIMACS formula");
  gadget->add_option("formula", file_a)->required();
  gadget->add_option("--half", half, "1 or 2")->check(CLI::IsMember({1, 2}))->default_val(1);
  gadget->add_flag("--minimize", minimized, "Minimize before printing");

  auto* bench = app.add_subcommand("bench", "Scaling benchmark: similarity against bisimulation");
  bench->add_option("--family", family, "random-lts | gadget")->default_val("random-lts");
  bench->add_option("--sizes", sizes, "Ascending state counts")->expected(1, -1);
  bench->add_option("--reps", reps, "Timed repetitions per size (>= 3)")->default_val(5);
  bench->add_option("--seed", seed, "Instance seed")->default_val(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitDecided;
    err << app.help();
    return kExitInputError;
  }

  try {
    const ScaleLimits limits = ScaleLimits::from_env();
    if (nei->parsed()) {
      const NeiOutcome r = decide_nei(load_dfa(file_a), load_dfa(file_b), parse_nei_path(nei_path));
      if (as_json) {
        out << to_json(r).dump(2) << '\n';
      } else {
        out << (r.nonempty ? "NON-EMPTY" : "EMPTY") << '\n';
        if (r.witness) out << "witness: " << word_text(*r.witness) << '\n';
      }
    } else if (sat->parsed()) {
      const SatOutcome r = sat_via_simulation(load_cnf(file_a), parse_nei_path(sat_path), limits);
      if (as_json) {
        out << to_json(r).dump(2) << '\n';
      } else {
        out << (r.satisfiable ? "SAT" : "UNSAT") << '\n';
        if (r.assignment) out << "assignment: " << assignment_literals(*r.assignment) << '\n';
        if (r.witness) out << "witness: " << *r.witness << '\n';
      }
    } else if (inclusion->parsed()) {
      const auto counterexample = inclusion_counterexample(load_dfa(file_a), load_dfa(file_b));
      if (as_json) {
        json doc{{"problem", "inclusion"}, {"verdict", counterexample ? "NOT-INCLUDED" : "INCLUDED"}};
        if (counterexample) doc["witness"] = counterexample->str();
        out << doc.dump(2) << '\n';
      } else {
        out << (counterexample ? "NOT-INCLUDED" : "INCLUDED") << '\n';
        if (counterexample) out << "counterexample: " << word_text(*counterexample) << '\n';
      }
    } else if (simulate->parsed()) {
      const bool r = simulates(load_lts(file_a), load_lts(file_b));
      if (as_json)
        out << json{{"problem", "simulate"}, {"verdict", r ? "SIMULATED" : "NOT-SIMULATED"}}.dump(2) << '\n';
      else
        out << (r ? "SIMULATED" : "NOT-SIMULATED") << '\n';
    } else if (simeq->parsed()) {
      const bool r = sim_equivalent(load_lts(file_a), state_arg(state_s), state_arg(state_t));
      if (as_json)
        out << json{{"problem", "simeq"}, {"verdict", r ? "EQUIVALENT" : "NOT-EQUIVALENT"}}.dump(2) << '\n';
      else
        out << (r ? "EQUIVALENT" : "NOT-EQUIVALENT") << '\n';
    } else if (similarity->parsed()) {
      const SimRelation rel = refined_similarity(load_lts(file_a));
      if (as_json) {
        json pairs = json::array();
        for (StateId s = 0; s < rel.num_states(); ++s)
          for (StateId t = 0; t < rel.num_states(); ++t)
            if (rel.contains(s, t)) pairs.push_back({s, t});
        out << json{{"problem", "similarity"}, {"pairs", pairs}}.dump(2) << '\n';
      } else {
        out << format_relation(rel);
      }
    } else if (bisim->parsed()) {
      const Partition p = bisimulation_partition(load_lts(file_a));
      if (as_json)
        out << json{{"problem", "bisim"}, {"blocks", p.blocks}}.dump(2) << '\n';
      else
        out << format_partition(p);
    } else if (alpha->parsed()) {
      const std::string text = write_lts(alpha_map(load_dfa(file_a)));
      if (as_json)
        out << json{{"problem", "alpha"}, {"lts", text}}.dump(2) << '\n';
      else
        out << text;
    } else if (minimize_cmd->parsed()) {
      const std::string text = write_dfa(minimize(load_dfa(file_a)));
      if (as_json)
        out << json{{"problem", "minimize"}, {"dfa", text}}.dump(2) << '\n';
      else
        out << text;
    } else if (gadget->parsed()) {
      Dfa d = build_split_dfa(load_cnf(file_a), half == 1 ? Half::First : Half::Second, limits);
      if (minimized) d = minimize(d);
      const std::string text = write_dfa(d);
      if (as_json)
        out << json{{"problem", "gadget"}, {"half", half}, {"dfa", text}}.dump(2) << '\n';
      else
        out << text;
    } else if (bench->parsed()) {
      BenchConfig config;
      config.family = parse_bench_family(family);
      config.sizes = sizes;
      config.reps = reps;
      config.seed = seed;
      const BenchReport report = bench_scaling(config);
      if (as_json)
        out << to_json(report).dump(2) << '\n';
      else
        out << format_bench_report(report);
    }
  } catch (const ScaleError& e) {
    err << "scale cap: " << e.what() << '\n';
    return kExitScaleCap;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ContractError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitDecided;
}

}  // namespace simred
