#pragma once

namespace ridge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ridge
