#pragma once

namespace riffle {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace riffle
