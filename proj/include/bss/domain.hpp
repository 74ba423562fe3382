#pragma once

#include <string>
#include <vector>

#include "bss/cost.hpp"
#include "bss/packed_state.hpp"

namespace bss {

struct Successor {
    PackedState state;
    Cost cost;
};

struct DomainInstance {
    PackedState start;
    PackedState goal;
    std::string id;
};

// A domain bound to one (start, goal) instance. All bundled domains are
// undirected with front-to-end heuristics: h_forward(s) estimates the cost
// from s to the goal, h_backward(s) the cost from the start to s. Both are
// required to be consistent; h_forward(goal) = h_backward(start) = 0.
//
// Domain objects are immutable after construction and safe to share
// read-only across concurrently running searches.
class Domain {
public:
    virtual ~Domain() = default;

    virtual void successors(const PackedState& s, std::vector<Successor>& out) const = 0;
    virtual Cost h_forward(const PackedState& s) const = 0;
    virtual Cost h_backward(const PackedState& s) const = 0;

    // Greatest common divisor of all edge costs (scaled units).
    virtual Cost edge_cost_gcd() const = 0;
    // Minimum edge cost (scaled units).
    virtual Cost min_edge_cost() const = 0;

    virtual std::string name() const = 0;
    virtual std::string describe(const PackedState& s) const = 0;
};

// Walks a path, validating that every consecutive pair is a generated edge,
// and returns the edge-cost sum. Throws std::logic_error on a broken chain.
Cost path_cost(const Domain& domain, const std::vector<PackedState>& path);

} // namespace bss
