#include "bss/domains/stp.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bss {

PackedState stp_pack(const StpState& s) {
    PackedState p;
    for (int i = 0; i < s.cells(); ++i)
        p.lo |= static_cast<std::uint64_t>(s.tiles[i]) << (4 * i);
    return p;
}

StpState stp_unpack(const PackedState& p, int n) {
    StpState s;
    s.n = n;
    for (int i = 0; i < s.cells(); ++i)
        s.tiles[i] = static_cast<std::uint8_t>((p.lo >> (4 * i)) & 0xF);
    return s;
}

StpState stp_goal(int n) {
    StpState s;
    s.n = n;
    for (int i = 0; i < s.cells(); ++i) s.tiles[i] = static_cast<std::uint8_t>(i);
    return s;
}

bool stp_valid(const StpState& s) {
    if (s.n != 3 && s.n != 4) return false;
    std::uint32_t seen = 0;
    for (int i = 0; i < s.cells(); ++i) {
        if (s.tiles[i] >= s.cells()) return false;
        seen |= 1u << s.tiles[i];
    }
    return seen == (1u << s.cells()) - 1;
}

void stp_successors(const StpState& s, StpCost cost_model,
                    std::vector<std::pair<StpState, Cost>>& out) {
    const int n = s.n;
    const int blank = s.blank();
    const int row = blank / n;
    const int col = blank % n;
    const int moves[4] = {-n, n, -1, 1};
    for (int m = 0; m < 4; ++m) {
        if (m == 0 && row == 0) continue;
        if (m == 1 && row == n - 1) continue;
        if (m == 2 && col == 0) continue;
        if (m == 3 && col == n - 1) continue;
        int from = blank + moves[m];
        StpState next = s;
        std::uint8_t tile = next.tiles[from];
        next.tiles[blank] = tile;
        next.tiles[from] = 0;
        Cost c = cost_model == StpCost::Heavy ? static_cast<Cost>(tile) : 1;
        out.emplace_back(next, c);
    }
}

Cost stp_md(const StpState& s, const StpState& anchor, StpCost cost_model,
            std::uint32_t excluded) {
    const int n = s.n;
    int anchor_pos[16];
    for (int i = 0; i < anchor.cells(); ++i) anchor_pos[anchor.tiles[i]] = i;
    Cost total = 0;
    for (int i = 0; i < s.cells(); ++i) {
        std::uint8_t tile = s.tiles[i];
        if (tile == 0 || (excluded & (1u << tile))) continue;
        int target = anchor_pos[tile];
        Cost dist = std::abs(i / n - target / n) + std::abs(i % n - target % n);
        Cost weight = cost_model == StpCost::Heavy ? static_cast<Cost>(tile) : 1;
        total = checked_add(total, checked_mul(weight, dist));
    }
    return total;
}

std::uint32_t stp_md4_excluded(const StpState& anchor) {
    if (anchor.n != 4) throw std::invalid_argument("stp: MD-4 requires a 4x4 board");
    std::uint32_t mask = 0;
    for (int cell : {5, 6, 9, 10}) mask |= 1u << anchor.tiles[cell];
    mask &= ~1u;   // the blank is never counted
    return mask;
}

namespace {

class StpDomain final : public Domain {
public:
    StpDomain(int n, StpCost cost_model, StpHeuristic heuristic,
              const StpState& start, const StpState& goal)
        : n_(n), cost_model_(cost_model), start_(start), goal_(goal) {
        if (!stp_valid(start) || !stp_valid(goal) || start.n != n || goal.n != n)
            throw std::invalid_argument("stp: invalid start or goal state");
        excluded_ = heuristic == StpHeuristic::Md4 ? stp_md4_excluded(goal) : 0;
    }

    void successors(const PackedState& p, std::vector<Successor>& out) const override {
        const StpState s = stp_unpack(p, n_);
        const int blank = s.blank();
        const int row = blank / n_;
        const int col = blank % n_;
        const int moves[4] = {-n_, n_, -1, 1};
        for (int m = 0; m < 4; ++m) {
            if (m == 0 && row == 0) continue;
            if (m == 1 && row == n_ - 1) continue;
            if (m == 2 && col == 0) continue;
            if (m == 3 && col == n_ - 1) continue;
            int from = blank + moves[m];
            StpState next = s;
            std::uint8_t tile = next.tiles[from];
            next.tiles[blank] = tile;
            next.tiles[from] = 0;
            Cost c = cost_model_ == StpCost::Heavy ? static_cast<Cost>(tile) : 1;
            out.push_back({stp_pack(next), c});
        }
    }

    Cost h_forward(const PackedState& s) const override {
        return stp_md(stp_unpack(s, n_), goal_, cost_model_, excluded_);
    }

    Cost h_backward(const PackedState& s) const override {
        return stp_md(stp_unpack(s, n_), start_, cost_model_, excluded_);
    }

    Cost edge_cost_gcd() const override { return 1; }
    Cost min_edge_cost() const override { return 1; }

    std::string name() const override {
        std::string base = "stp" + std::to_string(n_) + "x" + std::to_string(n_);
        return cost_model_ == StpCost::Heavy ? base + "-heavy" : base;
    }

    std::string describe(const PackedState& p) const override {
        StpState s = stp_unpack(p, n_);
        std::string out;
        for (int i = 0; i < s.cells(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s.tiles[i]);
        }
        return out;
    }

private:
    int n_;
    StpCost cost_model_;
    StpState start_, goal_;
    std::uint32_t excluded_;
};

} // namespace

std::unique_ptr<Domain> make_stp_domain(int n, StpCost cost_model, StpHeuristic heuristic,
                                        const StpState& start, const StpState& goal) {
    return std::make_unique<StpDomain>(n, cost_model, heuristic, start, goal);
}

} // namespace bss
