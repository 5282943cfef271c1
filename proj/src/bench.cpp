#include "simred/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "simred/bisimulation.hpp"
#include "simred/errors.hpp"
#include "simred/random.hpp"
#include "simred/simulation.hpp"

namespace simred {
namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

template <typename F>
double time_ms(F&& work) {
  const auto start = Clock::now();
  work();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate(const Lts& m, const SimRelation& sim, const Partition& part, std::size_t n) {
  auto bail = [&](const std::string& what) {
    throw std::runtime_error("bench instance n=" + std::to_string(n) + ": " + what);
  };
  if (auto err = check_similarity_invariants(m, sim)) bail(*err);
  if (auto err = check_partition_invariants(m, part)) bail(*err);
  // bisimilar states are always simulation equivalent
  for (const auto& block : part.blocks)
    for (StateId s : block)
      if (!sim.contains(s, block.front()) || !sim.contains(block.front(), s))
        bail("bisimilar states " + std::to_string(s) + " and " + std::to_string(block.front()) +
             " are not simulation equivalent");
}

}  // namespace

std::string to_string(BenchFamily family) {
  return family == BenchFamily::RandomLts ? "random-lts" : "gadget";
}

BenchFamily parse_bench_family(std::string_view name) {
  if (name == "random-lts") return BenchFamily::RandomLts;
  if (name == "gadget") return BenchFamily::Gadget;
  throw InputError("unknown benchmark family '" + std::string(name) + "' (expected random-lts or gadget)");
}

Lts bench_instance(BenchFamily family, std::size_t n, std::uint64_t seed) {
  Rng rng(seed * 0x9E3779B97F4A7C15ull + n);
  if (family == BenchFamily::RandomLts) return random_budget_lts(rng, n, 2, 2);
  // two alpha-images (one extra state each) plus the two gadget states
  const std::size_t half = std::max<std::size_t>(1, n >= 4 ? (n - 4) / 2 : 1);
  const Dfa a = random_dfa(rng, half, 2, 0.5);
  const Dfa b = random_dfa(rng, half, 2, 0.5);
  return ndet_gadget(alpha_map(a), alpha_map(complement(b))).lts;
}

std::optional<double> loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(ys[i]) - my);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

BenchReport bench_scaling(const BenchConfig& config) {
  if (config.sizes.empty()) throw InputError("bench: no sizes given");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end()) ||
      std::adjacent_find(config.sizes.begin(), config.sizes.end()) != config.sizes.end())
    throw InputError("bench: sizes must be strictly ascending");
  if (config.sizes.front() == 0) throw InputError("bench: sizes must be positive");
  if (config.reps < 3) throw InputError("bench: at least 3 repetitions are required");

  BenchReport report;
  report.config = config;
  for (std::size_t n : config.sizes) {
    const Lts m = bench_instance(config.family, n, config.seed);
    SizeTiming row;
    row.n = n;
    row.states = m.num_states();
    row.transitions = m.num_transitions();

    // warm-up: validated, not timed
    validate(m, refined_similarity(m), bisimulation_partition(m), n);

    for (unsigned r = 0; r < config.reps; ++r) {
      row.similarity_ms.push_back(time_ms([&] {
        const SimRelation rel = refined_similarity(m);
        if (rel.num_states() != m.num_states()) throw std::logic_error("bad relation");
      }));
      row.bisimulation_ms.push_back(time_ms([&] {
        const Partition p = bisimulation_partition(m);
        if (p.block_of.size() != m.num_states()) throw std::logic_error("bad partition");
      }));
    }
    row.similarity_median_ms = median(row.similarity_ms);
    row.bisimulation_median_ms = median(row.bisimulation_ms);
    report.rows.push_back(std::move(row));
  }

  const std::size_t k = report.rows.size();
  const std::size_t window_start = k - (k + 1) / 2;
  std::vector<double> sim_x, sim_y, bis_x, bis_y;
  for (std::size_t i = 0; i < k; ++i) {
    SizeTiming& row = report.rows[i];
    const bool in_window = i >= window_start;
    auto admit = [&](double median_ms, const char* what, std::vector<double>& xs, std::vector<double>& ys) {
      if (median_ms < kMinTimedMs) {
        report.warnings.push_back(std::string(what) + " at n=" + std::to_string(row.n) +
                                  " is below timer resolution; dropped from the fit");
        return false;
      }
      if (!in_window) return false;
      xs.push_back(static_cast<double>(row.states));
      ys.push_back(median_ms);
      return true;
    };
    row.similarity_in_fit = admit(row.similarity_median_ms, "similarity", sim_x, sim_y);
    row.bisimulation_in_fit = admit(row.bisimulation_median_ms, "bisimulation", bis_x, bis_y);
  }
  report.similarity_slope = loglog_slope(sim_x, sim_y);
  report.bisimulation_slope = loglog_slope(bis_x, bis_y);
  if (!report.similarity_slope) report.warnings.push_back("similarity slope undefined: fewer than two usable sizes");
  if (!report.bisimulation_slope)
    report.warnings.push_back("bisimulation slope undefined: fewer than two usable sizes");
  return report;
}

nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SizeTiming& row : report.rows)
    rows.push_back({{"n", row.n},
                    {"states", row.states},
                    {"transitions", row.transitions},
                    {"similarity_ms", row.similarity_ms},
                    {"bisimulation_ms", row.bisimulation_ms},
                    {"similarity_median_ms", row.similarity_median_ms},
                    {"bisimulation_median_ms", row.bisimulation_median_ms},
                    {"similarity_in_fit", row.similarity_in_fit},
                    {"bisimulation_in_fit", row.bisimulation_in_fit}});
  auto optional_number = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); };
  return {{"problem", "bench"},
          {"config",
           {{"family", to_string(report.config.family)},
            {"sizes", report.config.sizes},
            {"reps", report.config.reps},
            {"seed", report.config.seed}}},
          {"rows", rows},
          {"slopes",
           {{"similarity", optional_number(report.similarity_slope)},
            {"bisimulation", optional_number(report.bisimulation_slope)}}},
          {"warnings", report.warnings}};
}

BenchReport bench_report_from_json(const nlohmann::json& doc) {
  try {
    BenchReport report;
    const auto& config = doc.at("config");
    report.config.family = parse_bench_family(config.at("family").get<std::string>());
    report.config.sizes = config.at("sizes").get<std::vector<std::size_t>>();
    report.config.reps = config.at("reps").get<unsigned>();
    report.config.seed = config.at("seed").get<std::uint64_t>();
    for (const auto& r : doc.at("rows")) {
      SizeTiming row;
      row.n = r.at("n").get<std::size_t>();
      row.states = r.at("states").get<std::size_t>();
      row.transitions = r.at("transitions").get<std::size_t>();
      row.similarity_ms = r.at("similarity_ms").get<std::vector<double>>();
      row.bisimulation_ms = r.at("bisimulation_ms").get<std::vector<double>>();
      row.similarity_median_ms = r.at("similarity_median_ms").get<double>();
      row.bisimulation_median_ms = r.at("bisimulation_median_ms").get<double>();
      row.similarity_in_fit = r.at("similarity_in_fit").get<bool>();
      row.bisimulation_in_fit = r.at("bisimulation_in_fit").get<bool>();
      report.rows.push_back(std::move(row));
    }
    const auto& slopes = doc.at("slopes");
    if (!slopes.at("similarity").is_null()) report.similarity_slope = slopes.at("similarity").get<double>();
    if (!slopes.at("bisimulation").is_null()) report.bisimulation_slope = slopes.at("bisimulation").get<double>();
    report.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bench report: ") + e.what());
  }
}

std::string format_bench_report(const BenchReport& report) {
  std::ostringstream out;
  out << "family " << to_string(report.config.family) << ", reps " << report.config.reps << ", seed "
      << report.config.seed << '\n';
  out << std::setw(8) << "n" << std::setw(10) << "states" << std::setw(12) << "trans" << std::setw(16)
      << "sim median ms" << std::setw(18) << "bisim median ms" << '\n';
  out << std::fixed << std::setprecision(3);
  for (const SizeTiming& row : report.rows)
    out << std::setw(8) << row.n << std::setw(10) << row.states << std::setw(12) << row.transitions
        << std::setw(16) << row.similarity_median_ms << (row.similarity_in_fit ? '*' : ' ') << std::setw(17)
        << row.bisimulation_median_ms << (row.bisimulation_in_fit ? '*' : ' ') << '\n';
  auto slope = [](const std::optional<double>& v) {
    std::ostringstream s;
    if (v) s << std::fixed << std::setprecision(3) << *v; else s << "n/a";
    return s.str();
  };
  out << "similarity slope   " << slope(report.similarity_slope) << '\n';
  out << "bisimulation slope " << slope(report.bisimulation_slope) << '\n';
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  return out.str();
}

}  // namespace simred
