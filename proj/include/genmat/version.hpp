#pragma once

namespace genmat {

// Artifact version, embedded in every serialized report.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace genmat
