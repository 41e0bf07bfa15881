#pragma once

namespace ellmod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ellmod
