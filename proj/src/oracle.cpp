#include "bss/oracle.hpp"

#include <queue>
#include <unordered_map>
#include <vector>

#include "bss/packed_state.hpp"

namespace bss {

OracleResult optimal_cost(const Domain& domain, const DomainInstance& inst,
                          std::uint64_t state_budget) {
    struct Entry {
        Cost dist;
        std::uint64_t seq;
        PackedState state;
        bool operator>(const Entry& o) const {
            return dist != o.dist ? dist > o.dist : seq > o.seq;
        }
    };

    OracleResult result;
    std::unordered_map<PackedState, Cost, PackedStateHash> dist;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::uint64_t seq = 0;
    dist.emplace(inst.start, 0);
    queue.push({0, seq++, inst.start});
    std::vector<Successor> succ;
    while (!queue.empty()) {
        Entry e = queue.top();
        queue.pop();
        auto it = dist.find(e.state);
        if (it->second != e.dist) continue;   // stale entry
        if (e.state == inst.goal) {
            result.status = OracleResult::Status::Solved;
            result.cost = e.dist;
            return result;
        }
        ++result.expanded;
        succ.clear();
        domain.successors(e.state, succ);
        for (const Successor& s : succ) {
            Cost nd = checked_add(e.dist, s.cost);
            auto [sit, inserted] = dist.try_emplace(s.state, nd);
            if (!inserted) {
                if (sit->second <= nd) continue;
                sit->second = nd;
            } else if (state_budget != 0 && dist.size() > state_budget) {
                result.status = OracleResult::Status::BudgetExceeded;
                return result;
            }
            queue.push({nd, seq++, s.state});
        }
    }
    result.status = OracleResult::Status::Unsolvable;
    return result;
}

bool verify_bound(Cost result_cost, const Rational& w, Cost cstar) {
    return !(w * Rational(cstar) < Rational(result_cost));
}

} // namespace bss
