#pragma once

namespace kacmult {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kacmult
