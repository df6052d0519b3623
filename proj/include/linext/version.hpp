#pragma once

namespace linext {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace linext
