#pragma once

namespace strz {

inline constexpr const char* artifact_version = "1.0.0";

} // namespace strz
