#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "bss/domain.hpp"

namespace bss {

// Sliding tile puzzle on an n x n board, n in {3, 4}. Tile 0 is the blank.
struct StpState {
    int n = 4;
    std::array<std::uint8_t, 16> tiles{};   // tiles[cell] = tile at cell, row-major

    int cells() const { return n * n; }
    int blank() const {
        for (int i = 0; i < cells(); ++i)
            if (tiles[i] == 0) return i;
        throw std::logic_error("stp: no blank tile");
    }
    friend bool operator==(const StpState&, const StpState&) = default;
};

enum class StpCost { Unit, Heavy };
enum class StpHeuristic { Md, Md4 };

PackedState stp_pack(const StpState& s);
StpState stp_unpack(const PackedState& p, int n);
StpState stp_goal(int n);   // 0 1 2 ... in row-major order
bool stp_valid(const StpState& s);

// One successor per legal blank swap. Unit cost 1, heavy cost = the moved
// tile's label.
void stp_successors(const StpState& s, StpCost cost_model,
                    std::vector<std::pair<StpState, Cost>>& out);

// Manhattan distance to `anchor` over non-blank tiles not in `excluded`
// (bitmask by tile label), weighted by the tile label in the heavy model.
Cost stp_md(const StpState& s, const StpState& anchor, StpCost cost_model,
            std::uint32_t excluded);

// Tiles sitting on the four center cells (row-major 5, 6, 9, 10) of the
// anchor, as an exclusion mask. Defined for n = 4 only.
std::uint32_t stp_md4_excluded(const StpState& anchor);

std::unique_ptr<Domain> make_stp_domain(int n, StpCost cost_model, StpHeuristic heuristic,
                                        const StpState& start, const StpState& goal);

} // namespace bss
