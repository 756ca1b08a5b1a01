#pragma once

namespace phyper {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace phyper
