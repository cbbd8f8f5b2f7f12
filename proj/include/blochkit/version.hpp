#pragma once

namespace blochkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace blochkit
