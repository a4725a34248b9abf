#pragma once

namespace qes {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qes
