#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "bss/domain.hpp"

namespace bss {

// 4-peg Towers of Hanoi. Disk 0 is the largest; higher indices are smaller.
// A peg assignment alone determines a unique legal stacking, so every
// assignment is a valid state.
struct TohState {
    int n = 0;
    std::array<std::uint8_t, 12> pegs{};   // pegs[disk] in 0..3

    friend bool operator==(const TohState&, const TohState&) = default;
};

inline constexpr int kTohPegs = 4;
inline constexpr int kTohMaxDisks = 12;

PackedState toh_pack(const TohState& s);
TohState toh_unpack(const PackedState& p, int n);
TohState toh_all_on_peg(int n, int peg);
bool toh_valid(const TohState& s);

// All moves of a peg's top disk (its smallest) onto a peg whose top disk is
// larger or which is empty. Unit cost.
void toh_successors(const TohState& s, std::vector<std::pair<TohState, Cost>>& out);

class PdbTable;   // see bss/pdb.hpp

std::unique_ptr<Domain> make_toh_domain(
    int n,
    std::vector<std::shared_ptr<const PdbTable>> forward_tables,
    std::vector<std::shared_ptr<const PdbTable>> backward_tables,
    const TohState& start, const TohState& goal);

} // namespace bss
