#pragma once

#include <cstdint>
#include <optional>

#include "bss/cost.hpp"
#include "bss/domain.hpp"
#include "bss/rational.hpp"

namespace bss {

// Ground-truth provider: uninformed uniform-cost search. Kept deliberately
// independent of the search engine's frontier and policy code so it can
// serve as an oracle for it.
struct OracleResult {
    enum class Status { Solved, Unsolvable, BudgetExceeded };
    Status status = Status::Unsolvable;
    std::optional<Cost> cost;
    std::uint64_t expanded = 0;
};

// Exact C* via Dijkstra with no heuristic. `state_budget` caps the number
// of stored states; exceeding it yields BudgetExceeded with no cost, never
// a wrong answer. A budget of 0 means unlimited.
OracleResult optimal_cost(const Domain& domain, const DomainInstance& inst,
                          std::uint64_t state_budget);

// result_cost <= W * cstar under exact rational comparison.
bool verify_bound(Cost result_cost, const Rational& w, Cost cstar);

} // namespace bss
