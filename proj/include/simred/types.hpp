#pragma once

#include <cstdint>
#include <string_view>

namespace simred {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

/// Reserved label added by alpha_map to mark acceptance ("✓", UTF-8).
inline constexpr std::string_view kCheckLabel = "\xE2\x9C\x93";

}  // namespace simred
