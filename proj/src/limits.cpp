#include "simred/limits.hpp"

#include <cstdlib>
#include <string>

namespace simred {
namespace {

template <typename T>
void override_from(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  try {
    const unsigned long long parsed = std::stoull(raw);
    if (parsed > 0) value = static_cast<T>(parsed);
  } catch (const std::exception&) {
    // unparsable values leave the default in place
  }
}

}  // namespace

ScaleLimits ScaleLimits::from_env() {
  ScaleLimits limits;
  override_from("SIMRED_ENUM_CAP", limits.enumeration_words);
  override_from("SIMRED_SAT_VARS_CAP", limits.sat_vars);
  override_from("SIMRED_GADGET_VARS_CAP", limits.gadget_vars);
  return limits;
}

}  // namespace simred
