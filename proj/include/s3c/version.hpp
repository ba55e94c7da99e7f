#pragma once

namespace s3c {
inline constexpr const char* kToolVersion = "1.0.0";
}
