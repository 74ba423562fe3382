#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace bss {

// 128-bit packed state handle. Wide enough for every bundled domain:
// 4x4 tiles at 4 bits each, up to 24 pancakes at 5 bits, 12 ToH disks at
// 2 bits, and grid coordinates.
struct PackedState {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    friend bool operator==(const PackedState&, const PackedState&) = default;
};

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct PackedStateHash {
    std::size_t operator()(const PackedState& s) const {
        return mix64(s.lo ^ mix64(s.hi));
    }
};

} // namespace bss
