#pragma once

namespace lsm {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace lsm
