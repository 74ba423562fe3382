#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bss {

// Domain-scaled integer cost. Domains scale their edge costs so that every
// edge is integral (grids use x2: straight = 2, diagonal = 3).
using Cost = std::int64_t;

inline constexpr Cost kMaxCost = std::numeric_limits<Cost>::max();

// Overflowing cost arithmetic is a hard error, never a silent wrap.
inline Cost checked_add(Cost a, Cost b) {
    Cost r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("cost addition overflow");
    return r;
}

inline Cost checked_mul(Cost a, Cost b) {
    Cost r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("cost multiplication overflow");
    return r;
}

} // namespace bss
