#pragma once

#include <optional>
#include <vector>

#include "bss/config.hpp"
#include "bss/domain.hpp"
#include "bss/frontier.hpp"
#include "bss/policies.hpp"

namespace bss {

enum class SearchStatus { Solved, Unsolvable, Timeout, MemOut };

struct SearchResult {
    SearchStatus status = SearchStatus::Unsolvable;
    std::optional<Cost> cost;
    std::vector<PackedState> path;           // start -> goal, empty if no solution
    std::uint64_t expansions_f = 0;
    std::uint64_t expansions_b = 0;
    std::uint64_t generated = 0;
    std::uint64_t iterations = 0;
    RationalKey terminal_lb{0};
    double wall_seconds = 0;
    Cost max_expanded_g_f = 0;
    Cost max_expanded_g_b = 0;
    // Invariant counters, populated when check_invariants is set. All three
    // must stay zero for conforming configurations.
    std::uint64_t priority_bound_violations = 0;  // inserted node with b_W > W*b
    std::uint64_t reexpansions = 0;               // (state, direction) expanded twice
    std::uint64_t alb_dominance_violations = 0;   // iteration with ALB < base bound
    // Iterations whose base bound exceeded bound_safety_reference while the
    // incumbent was absent or also above it (the termination-safety
    // property behind the suboptimality guarantee).
    std::uint64_t bound_safety_violations = 0;
    // Max instantaneous base bound observed across iterations (check runs).
    RationalKey max_base_bound{0};
};

// One bidirectional search run. Owns all of its state; a single run is
// strictly single-threaded, but any number of runs over shared read-only
// Domain objects may execute concurrently.
class BiSearch {
public:
    BiSearch(const SearchConfig& cfg, const Domain& domain, const DomainInstance& inst);

    SearchResult run();

    // Building blocks of run(), exposed so tests can drive single cycles.
    bool loop_would_exit();
    Dir next_direction();
    void expand_best(Dir d);
    std::vector<PackedState> reconstruct_path() const;

    Frontier& frontier(Dir d) { return d == Dir::F ? forward_ : backward_; }
    bool has_incumbent() const { return u_valid_; }
    Cost incumbent() const { return u_; }
    const PackedState& meeting_state() const { return meet_; }
    const RationalKey& bound() const { return lb_; }
    const SearchResult& stats() const { return result_; }

private:
    void update_bound();
    void note_insertion(Cost g, Cost h_same, Cost h_opp, const RationalKey& key);

    const SearchConfig cfg_;
    const Domain& domain_;
    DomainInstance inst_;
    KeyCalc key_;
    Frontier forward_;
    Frontier backward_;
    Cost u_ = 0;
    bool u_valid_ = false;
    PackedState meet_{};
    bool meet_valid_ = false;
    RationalKey lb_{0};
    Dir last_dir_ = Dir::B;   // alternate picks F first
    std::vector<Successor> succ_buf_;
    SearchResult result_;
};

SearchResult run_search(const SearchConfig& cfg, const Domain& domain, const DomainInstance& inst);

} // namespace bss
