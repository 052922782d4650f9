#pragma once

namespace crossmodal {

inline constexpr const char* kToolName = "crossmodal";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace crossmodal
