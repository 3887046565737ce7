#pragma once

namespace isospec {
inline constexpr const char* kVersion = "isospec 0.1.0";
}
