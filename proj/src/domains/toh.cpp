#include "bss/domains/toh.hpp"

#include <stdexcept>

#include "bss/pdb.hpp"

namespace bss {

PackedState toh_pack(const TohState& s) {
    PackedState p;
    for (int d = 0; d < s.n; ++d)
        p.lo |= static_cast<std::uint64_t>(s.pegs[d]) << (2 * d);
    return p;
}

TohState toh_unpack(const PackedState& p, int n) {
    TohState s;
    s.n = n;
    for (int d = 0; d < n; ++d)
        s.pegs[d] = static_cast<std::uint8_t>((p.lo >> (2 * d)) & 0x3);
    return s;
}

TohState toh_all_on_peg(int n, int peg) {
    TohState s;
    s.n = n;
    for (int d = 0; d < n; ++d) s.pegs[d] = static_cast<std::uint8_t>(peg);
    return s;
}

bool toh_valid(const TohState& s) {
    if (s.n < 1 || s.n > kTohMaxDisks) return false;
    for (int d = 0; d < s.n; ++d)
        if (s.pegs[d] >= kTohPegs) return false;
    return true;
}

void toh_successors(const TohState& s, std::vector<std::pair<TohState, Cost>>& out) {
    // Top disk per peg: the highest index (smallest disk) currently on it.
    int top[kTohPegs] = {-1, -1, -1, -1};
    for (int d = 0; d < s.n; ++d) top[s.pegs[d]] = d;
    for (int p = 0; p < kTohPegs; ++p) {
        int d = top[p];
        if (d < 0) continue;
        for (int q = 0; q < kTohPegs; ++q) {
            if (q == p || (top[q] >= 0 && top[q] > d)) continue;
            TohState next = s;
            next.pegs[d] = static_cast<std::uint8_t>(q);
            out.emplace_back(next, 1);
        }
    }
}

namespace {

class TohDomain final : public Domain {
public:
    TohDomain(int n,
              std::vector<std::shared_ptr<const PdbTable>> forward_tables,
              std::vector<std::shared_ptr<const PdbTable>> backward_tables,
              const TohState& start, const TohState& goal)
        : n_(n),
          forward_tables_(std::move(forward_tables)),
          backward_tables_(std::move(backward_tables)) {
        if (!toh_valid(start) || !toh_valid(goal) || start.n != n || goal.n != n)
            throw std::invalid_argument("toh: invalid start or goal state");
        // Anchors must score zero for front-to-end heuristics.
        if (additive_h(goal, forward_tables_) != 0)
            throw std::invalid_argument("toh: forward tables not anchored at goal");
        if (additive_h(start, backward_tables_) != 0)
            throw std::invalid_argument("toh: backward tables not anchored at start");
    }

    void successors(const PackedState& p, std::vector<Successor>& out) const override {
        TohState s = toh_unpack(p, n_);
        int top[kTohPegs] = {-1, -1, -1, -1};
        for (int d = 0; d < n_; ++d) top[s.pegs[d]] = d;
        for (int pg = 0; pg < kTohPegs; ++pg) {
            int d = top[pg];
            if (d < 0) continue;
            for (int q = 0; q < kTohPegs; ++q) {
                if (q == pg || (top[q] >= 0 && top[q] > d)) continue;
                TohState next = s;
                next.pegs[d] = static_cast<std::uint8_t>(q);
                out.push_back({toh_pack(next), 1});
            }
        }
    }

    Cost h_forward(const PackedState& p) const override {
        return additive_h(toh_unpack(p, n_), forward_tables_);
    }

    Cost h_backward(const PackedState& p) const override {
        return additive_h(toh_unpack(p, n_), backward_tables_);
    }

    Cost edge_cost_gcd() const override { return 1; }
    Cost min_edge_cost() const override { return 1; }

    std::string name() const override { return "toh" + std::to_string(n_); }

    std::string describe(const PackedState& p) const override {
        TohState s = toh_unpack(p, n_);
        std::string out;
        for (int d = 0; d < s.n; ++d) {
            if (d) out += ' ';
            out += std::to_string(s.pegs[d]);
        }
        return out;
    }

private:
    int n_;
    std::vector<std::shared_ptr<const PdbTable>> forward_tables_;
    std::vector<std::shared_ptr<const PdbTable>> backward_tables_;
};

} // namespace

std::unique_ptr<Domain> make_toh_domain(
    int n,
    std::vector<std::shared_ptr<const PdbTable>> forward_tables,
    std::vector<std::shared_ptr<const PdbTable>> backward_tables,
    const TohState& start, const TohState& goal) {
    return std::make_unique<TohDomain>(n, std::move(forward_tables), std::move(backward_tables),
                                       start, goal);
}

} // namespace bss
