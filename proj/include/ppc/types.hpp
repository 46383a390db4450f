#pragma once

#include <cstdint>

namespace ppc {

using PointId = std::uint32_t;
using LineId = std::uint32_t;
using VarId = std::uint32_t;

/// Colors are 1..d; 0 is the uncolored marker.
using Color = std::uint16_t;
inline constexpr Color kUncolored = 0;

}  // namespace ppc
