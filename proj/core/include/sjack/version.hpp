#pragma once

namespace sjack {
inline constexpr const char* kVersion = "0.1.0";
}
