#pragma once

namespace trifol {

inline constexpr const char* kToolName = "trifol";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace trifol
