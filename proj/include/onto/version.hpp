#pragma once

namespace onto {

inline constexpr const char* kVersion = "1.0.0";

} // namespace onto
