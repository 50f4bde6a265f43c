#pragma once

namespace econolab {

inline constexpr const char* kToolName = "econolab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace econolab
