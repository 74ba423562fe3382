#include "bss/domains/pancake.hpp"

#include <algorithm>
#include <stdexcept>

namespace bss {

PackedState pancake_pack(const PancakeState& s) {
    PackedState p;
    for (int i = 0; i < s.n; ++i) {
        std::uint64_t v = s.stack[i];
        if (i < 12)
            p.lo |= v << (5 * i);
        else
            p.hi |= v << (5 * (i - 12));
    }
    return p;
}

PancakeState pancake_unpack(const PackedState& p, int n) {
    PancakeState s;
    s.n = n;
    for (int i = 0; i < n; ++i) {
        std::uint64_t v = i < 12 ? (p.lo >> (5 * i)) : (p.hi >> (5 * (i - 12)));
        s.stack[i] = static_cast<std::uint8_t>(v & 0x1F);
    }
    return s;
}

PancakeState pancake_goal(int n) {
    PancakeState s;
    s.n = n;
    for (int i = 0; i < n; ++i) s.stack[i] = static_cast<std::uint8_t>(i + 1);
    return s;
}

bool pancake_valid(const PancakeState& s) {
    if (s.n < 2 || s.n > 24) return false;
    std::uint32_t seen = 0;
    for (int i = 0; i < s.n; ++i) {
        if (s.stack[i] < 1 || s.stack[i] > s.n) return false;
        seen |= 1u << (s.stack[i] - 1);
    }
    return seen == (1u << s.n) - 1;
}

PancakeState pancake_flip(const PancakeState& s, int len) {
    if (len < 2 || len > s.n) throw std::invalid_argument("pancake: bad flip length");
    PancakeState next = s;
    std::reverse(next.stack.begin(), next.stack.begin() + len);
    return next;
}

void pancake_successors(const PancakeState& s,
                        std::vector<std::pair<PancakeState, Cost>>& out) {
    for (int len = 2; len <= s.n; ++len) out.emplace_back(pancake_flip(s, len), 1);
}

namespace {

// Adjacency of the anchor stacking as a per-label neighbor mask; the table
// below the stack acts as pancake n+1.
struct AnchorAdjacency {
    int n = 0;
    std::array<std::uint32_t, 27> adj{};

    explicit AnchorAdjacency(const PancakeState& anchor) : n(anchor.n) {
        if (!pancake_valid(anchor))
            throw std::invalid_argument("pancake: invalid anchor state");
        auto link = [&](int a, int b) {
            adj[a] |= 1u << b;
            adj[b] |= 1u << a;
        };
        for (int i = 0; i + 1 < n; ++i) link(anchor.stack[i], anchor.stack[i + 1]);
        link(anchor.stack[n - 1], n + 1);
    }

    bool adjacent(int a, int b) const { return (adj[a] >> b) & 1u; }
};

Cost gap_count(const PancakeState& s, const AnchorAdjacency& adj, int excluded_max) {
    Cost gaps = 0;
    for (int i = 0; i < s.n; ++i) {
        int a = s.stack[i];
        int b = i + 1 < s.n ? s.stack[i + 1] : s.n + 1;
        if (a <= excluded_max || b <= excluded_max) continue;
        if (!adj.adjacent(a, b)) ++gaps;
    }
    return gaps;
}

class PancakeDomain final : public Domain {
public:
    PancakeDomain(int n, int gap_excluded, const PancakeState& start, const PancakeState& goal)
        : n_(n),
          excluded_(gap_excluded),
          forward_adj_(goal),
          backward_adj_(start) {
        if (!pancake_valid(start) || !pancake_valid(goal) || start.n != n || goal.n != n)
            throw std::invalid_argument("pancake: invalid start or goal state");
        if (gap_excluded < 0 || gap_excluded >= n)
            throw std::invalid_argument("pancake: bad GAP exclusion count");
    }

    void successors(const PackedState& p, std::vector<Successor>& out) const override {
        PancakeState s = pancake_unpack(p, n_);
        for (int len = 2; len <= n_; ++len) {
            std::reverse(s.stack.begin(), s.stack.begin() + len);
            out.push_back({pancake_pack(s), 1});
            std::reverse(s.stack.begin(), s.stack.begin() + len);
        }
    }

    Cost h_forward(const PackedState& p) const override {
        return gap_count(pancake_unpack(p, n_), forward_adj_, excluded_);
    }

    Cost h_backward(const PackedState& p) const override {
        return gap_count(pancake_unpack(p, n_), backward_adj_, excluded_);
    }

    Cost edge_cost_gcd() const override { return 1; }
    Cost min_edge_cost() const override { return 1; }

    std::string name() const override { return "pancake-" + std::to_string(n_); }

    std::string describe(const PackedState& p) const override {
        PancakeState s = pancake_unpack(p, n_);
        std::string out;
        for (int i = 0; i < s.n; ++i) {
            if (i) out += ' ';
            out += std::to_string(s.stack[i]);
        }
        return out;
    }

private:
    int n_;
    int excluded_;
    AnchorAdjacency forward_adj_;    // goal stacking
    AnchorAdjacency backward_adj_;   // start stacking
};

} // namespace

Cost gap_heuristic(const PancakeState& s, const PancakeState& anchor, int excluded_max) {
    return gap_count(s, AnchorAdjacency(anchor), excluded_max);
}

std::unique_ptr<Domain> make_pancake_domain(int n, int gap_excluded,
                                            const PancakeState& start,
                                            const PancakeState& goal) {
    return std::make_unique<PancakeDomain>(n, gap_excluded, start, goal);
}

} // namespace bss
