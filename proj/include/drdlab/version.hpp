#pragma once

namespace drdlab {

inline constexpr const char* k_version = "0.1.0";

}  // namespace drdlab
