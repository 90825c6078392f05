#pragma once

namespace cmholes {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cmholes
