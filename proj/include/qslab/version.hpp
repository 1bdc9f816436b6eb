#pragma once

namespace qslab {

inline constexpr const char* kArtifactName = "qslab";
inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace qslab
