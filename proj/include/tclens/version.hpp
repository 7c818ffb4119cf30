#pragma once

namespace tclens {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tclens
