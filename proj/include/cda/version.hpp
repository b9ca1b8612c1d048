#pragma once

namespace cda {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cda
