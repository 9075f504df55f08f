#pragma once

namespace kaleido {

inline constexpr const char* kVersion = "0.1.0";

} // namespace kaleido
