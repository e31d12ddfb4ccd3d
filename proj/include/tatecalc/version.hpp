#pragma once

namespace tate {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tate
