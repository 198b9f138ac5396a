#pragma once

#include <string_view>

namespace numon {

inline constexpr std::string_view kVersionString = "0.1.0";

}  // namespace numon
