#pragma once

namespace umemura {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace umemura
