#pragma once

namespace ringecho {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ringecho
