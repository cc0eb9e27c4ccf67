#pragma once

namespace sjj {
inline constexpr const char* kVersion = "0.1.0";
}
