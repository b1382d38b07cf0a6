#pragma once

#include <string_view>

namespace secant {

// Cache keys and result envelopes embed this string; bump it whenever a
// formula change should invalidate previously cached results.
inline constexpr std::string_view kToolVersion = "secant 1.0.0";

}  // namespace secant
