#pragma once

namespace permlab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace permlab
