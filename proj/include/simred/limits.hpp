#pragma once

#include <cstdint>

namespace simred {

/// Size guards for the exhaustive oracles and the SAT gadget.
struct ScaleLimits {
  /// Maximum number of words enumerate_language may generate.
  std::uint64_t enumeration_words = 1'000'000;
  /// Maximum variable count accepted by brute_force_sat.
  unsigned sat_vars = 20;
  /// Maximum variable count accepted when building the split-language DFAs.
  unsigned gadget_vars = 24;

  /// Defaults overridden by SIMRED_ENUM_CAP, SIMRED_SAT_VARS_CAP and
  /// SIMRED_GADGET_VARS_CAP when those are set to positive integers.
  static ScaleLimits from_env();
};

}  // namespace simred
