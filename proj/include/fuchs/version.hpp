#pragma once

namespace fuchs {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fuchs
