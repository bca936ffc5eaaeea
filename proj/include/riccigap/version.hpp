#pragma once

namespace riccigap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace riccigap
