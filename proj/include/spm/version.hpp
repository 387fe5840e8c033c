#pragma once

namespace spm {

inline constexpr const char* kToolName = "spm";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace spm
