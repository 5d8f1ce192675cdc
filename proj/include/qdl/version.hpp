#pragma once

namespace qdl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qdl
