#pragma once

namespace gradedflip {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kJsonSchema = 1;

}  // namespace gradedflip
