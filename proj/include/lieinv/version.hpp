#pragma once

namespace lieinv {
inline constexpr const char* kVersion = "0.1.0";
}
