#pragma once

namespace dmdd {

inline constexpr const char* version = "0.1.0";

}  // namespace dmdd
