#pragma once

namespace fstar {

inline constexpr const char* kToolName = "fstar";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace fstar
