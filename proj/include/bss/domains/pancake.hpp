#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "bss/domain.hpp"

namespace bss {

// Pancake puzzle: a stack of n distinct pancakes labeled 1..n (1 smallest),
// stored top to bottom, n <= 24 (5 bits per position, 12 per packed word).
// A move flips a prefix of length 2..n at unit cost.
struct PancakeState {
    int n = 0;
    std::array<std::uint8_t, 24> stack{};   // stack[0] = top

    friend bool operator==(const PancakeState&, const PancakeState&) = default;
};

PackedState pancake_pack(const PancakeState& s);
PancakeState pancake_unpack(const PackedState& p, int n);
PancakeState pancake_goal(int n);   // 1 2 3 ... top to bottom
bool pancake_valid(const PancakeState& s);
PancakeState pancake_flip(const PancakeState& s, int len);

void pancake_successors(const PancakeState& s,
                        std::vector<std::pair<PancakeState, Cost>>& out);

// GAP heuristic relative to an arbitrary anchor stacking: the number of
// adjacent positions (including the table, treated as pancake n+1) whose
// pancake pair is not adjacent in the anchor. Pairs involving a pancake
// with label <= excluded_max are skipped (GAP-k).
Cost gap_heuristic(const PancakeState& s, const PancakeState& anchor, int excluded_max);

std::unique_ptr<Domain> make_pancake_domain(int n, int gap_excluded,
                                            const PancakeState& start,
                                            const PancakeState& goal);

} // namespace bss
