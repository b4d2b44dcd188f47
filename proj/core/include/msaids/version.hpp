#pragma once

namespace msaids {

inline constexpr const char* kVersion = "0.1.0";

// File-format versions. Bump when a serialized layout changes shape.
inline constexpr int kEventFormatVersion = 1;
inline constexpr int kAlertFormatVersion = 1;
inline constexpr int kPolicyFormatVersion = 1;
inline constexpr int kWireFormatVersion = 1;

} // namespace msaids
