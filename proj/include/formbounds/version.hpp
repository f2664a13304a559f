#pragma once

namespace formbounds {

inline constexpr const char* kVersion = "0.1.0";

}
