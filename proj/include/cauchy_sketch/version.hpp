#pragma once

namespace cauchy_sketch {
inline constexpr const char* kVersion = "0.1.0";
}
