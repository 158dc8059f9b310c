#pragma once

namespace intake {

inline constexpr const char* kVersion = "0.1.0";

} // namespace intake
