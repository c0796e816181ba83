#pragma once

namespace gkv {
inline constexpr const char* kVersion = "1.0.0";
}
