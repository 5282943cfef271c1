#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simred/lts.hpp"

namespace simred {

enum class BenchFamily {
  RandomLts,  // out-degree 2 over two labels, uniformly random targets
  Gadget,     // ndet_gadget(alpha(A), alpha(complement(B))) for random A, B
};

std::string to_string(BenchFamily family);
/// Accepts "random-lts" and "gadget". Throws InputError otherwise.
BenchFamily parse_bench_family(std::string_view name);

struct BenchConfig {
  BenchFamily family = BenchFamily::RandomLts;
  std::vector<std::size_t> sizes{2000, 4000, 8000, 16000};
  unsigned reps = 5;
  std::uint64_t seed = 1;

  friend bool operator==(const BenchConfig&, const BenchConfig&) = default;
};

struct SizeTiming {
  std::size_t n = 0;  // requested size
  std::size_t states = 0;
  std::size_t transitions = 0;
  std::vector<double> similarity_ms;
  std::vector<double> bisimulation_ms;
  double similarity_median_ms = 0.0;
  double bisimulation_median_ms = 0.0;
  bool similarity_in_fit = false;
  bool bisimulation_in_fit = false;

  friend bool operator==(const SizeTiming&, const SizeTiming&) = default;
};

struct BenchReport {
  BenchConfig config;
  std::vector<SizeTiming> rows;
  std::optional<double> similarity_slope;
  std::optional<double> bisimulation_slope;
  std::vector<std::string> warnings;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Instance for one size; a function of (family, n, seed) only.
Lts bench_instance(BenchFamily family, std::size_t n, std::uint64_t seed);

/// Medians below this are treated as timer noise and left out of the fit.
inline constexpr double kMinTimedMs = 0.05;

/// Least-squares slope of log(y) against log(x). Needs two distinct x.
std::optional<double> loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Times refined_similarity and bisimulation_partition per size: one
/// discarded warm-up run whose output is validated, then `reps` timed runs.
/// Slopes are fitted over the largest half of the sizes. Throws InputError
/// when sizes are not ascending or reps < 3, and std::runtime_error when a
/// warm-up output fails validation.
BenchReport bench_scaling(const BenchConfig& config);

nlohmann::json to_json(const BenchReport& report);
BenchReport bench_report_from_json(const nlohmann::json& doc);

/// Fixed-width table plus the two slopes.
std::string format_bench_report(const BenchReport& report);

}  // namespace simred
