#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "bss/cost.hpp"
#include "bss/packed_state.hpp"
#include "bss/policies.hpp"
#include "bss/rational.hpp"

namespace bss {

enum class NodeStatus : std::uint8_t { Open, Closed };

struct NodeRec {
    Cost g = 0;
    Cost h_same = 0;   // heuristic in the frontier's own direction
    Cost h_opp = 0;    // heuristic of the opposite direction at this state
    PackedState parent{};
    bool has_parent = false;
    NodeStatus status = NodeStatus::Open;
    std::uint8_t expansions = 0;
};

// One direction's open/closed structure. The open list is a binary heap
// ordered by (key ascending, g descending, insertion order LIFO) with lazy
// reinsertion: improving a state's g pushes a fresh entry and the stale one
// is skipped when it surfaces. Keys are non-increasing under g improvements
// for every supported priority function, so after purging stale top entries
// the heap top is the exact open minimum.
//
// When aux tracking is enabled the frontier maintains exact multisets of the
// unweighted keys f = g+h, g, b = f+(g-hOpp), and max(f, 2g) over the open
// set, one entry per open state.
class Frontier {
public:
    explicit Frontier(bool track_aux) : track_aux_(track_aux) {}

    enum class Relax { Inserted, Improved, Ignored };

    // Inserts s, or improves an open entry with a smaller g. Closed states
    // and open entries with an equal or smaller g are ignored. The key must
    // be the configured priority for (g, h_same, h_opp).
    Relax relax(const PackedState& s, Cost g, Cost h_same, Cost h_opp,
                const RationalKey& key, const PackedState* parent);

    struct Popped {
        PackedState state;
        NodeRec rec;
    };

    // Removes and closes the best open node: minimum key, then maximum g,
    // then most recently inserted. Throws std::logic_error when empty.
    Popped pop_best();

    const NodeRec* find(const PackedState& s) const {
        auto it = by_state_.find(s);
        return it == by_state_.end() ? nullptr : &it->second;
    }

    std::size_t open_count() const { return open_count_; }
    bool empty() const { return open_count_ == 0; }
    std::size_t stored_states() const { return by_state_.size(); }
    std::size_t heap_entries() const { return heap_.size(); }

    // Exact minimum key over the open set. Requires a nonempty open list.
    const RationalKey& weighted_min();

    // Snapshot of the minima feeding the bound computations.
    DirBound bound_stats();

    // Recomputes the aux minima by full scan and cross-checks the multisets.
    // Throws std::logic_error on any mismatch.
    void check_coherence() const;

private:
    struct HeapEntry {
        RationalKey key;
        Cost g;
        std::uint64_t seq;
        PackedState state;
    };

    struct WorseThan {
        bool operator()(const HeapEntry& a, const HeapEntry& b) const {
            auto c = a.key <=> b.key;
            if (c != 0) return c > 0;
            if (a.g != b.g) return a.g < b.g;
            return a.seq < b.seq;
        }
    };

    struct AuxValues {
        Cost f, g, b, mm;
    };

    static AuxValues aux_values(const NodeRec& r) {
        Cost f = checked_add(r.g, r.h_same);
        Cost b = checked_add(f, r.g - r.h_opp);
        Cost mm = std::max(f, checked_add(r.g, r.g));
        return {f, r.g, b, mm};
    }

    void aux_insert(const NodeRec& r);
    void aux_erase(const NodeRec& r);
    bool stale(const HeapEntry& e) const;
    void purge_stale_top();

    bool track_aux_;
    std::vector<HeapEntry> heap_;
    std::unordered_map<PackedState, NodeRec, PackedStateHash> by_state_;
    std::size_t open_count_ = 0;
    std::uint64_t next_seq_ = 0;
    std::multiset<Cost> aux_f_, aux_g_, aux_b_, aux_mm_;
};

} // namespace bss
