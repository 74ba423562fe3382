#include "bss/frontier.hpp"

#include <algorithm>
#include <stdexcept>

namespace bss {

Frontier::Relax Frontier::relax(const PackedState& s, Cost g, Cost h_same, Cost h_opp,
                                const RationalKey& key, const PackedState* parent) {
    auto [it, inserted] = by_state_.try_emplace(s);
    NodeRec& rec = it->second;
    if (!inserted) {
        if (rec.status == NodeStatus::Closed) return Relax::Ignored;
        if (rec.g <= g) return Relax::Ignored;
        if (track_aux_) aux_erase(rec);
    } else {
        rec.h_same = h_same;
        rec.h_opp = h_opp;
        ++open_count_;
    }
    rec.g = g;
    if (parent) {
        rec.parent = *parent;
        rec.has_parent = true;
    }
    if (track_aux_) aux_insert(rec);
    heap_.push_back(HeapEntry{key, g, next_seq_++, s});
    std::push_heap(heap_.begin(), heap_.end(), WorseThan{});
    return inserted ? Relax::Inserted : Relax::Improved;
}

bool Frontier::stale(const HeapEntry& e) const {
    auto it = by_state_.find(e.state);
    return it == by_state_.end() || it->second.status != NodeStatus::Open || it->second.g != e.g;
}

void Frontier::purge_stale_top() {
    while (!heap_.empty() && stale(heap_.front())) {
        std::pop_heap(heap_.begin(), heap_.end(), WorseThan{});
        heap_.pop_back();
    }
}

Frontier::Popped Frontier::pop_best() {
    purge_stale_top();
    if (heap_.empty() || open_count_ == 0)
        throw std::logic_error("frontier: pop on empty open list");
    std::pop_heap(heap_.begin(), heap_.end(), WorseThan{});
    HeapEntry e = heap_.back();
    heap_.pop_back();
    NodeRec& rec = by_state_.at(e.state);
    rec.status = NodeStatus::Closed;
    ++rec.expansions;
    --open_count_;
    if (track_aux_) aux_erase(rec);
    return Popped{e.state, rec};
}

const RationalKey& Frontier::weighted_min() {
    purge_stale_top();
    if (heap_.empty())
        throw std::logic_error("frontier: weighted_min on empty open list");
    return heap_.front().key;
}

DirBound Frontier::bound_stats() {
    DirBound d;
    d.open_nonempty = open_count_ > 0;
    if (!d.open_nonempty) return d;
    d.weighted_min = weighted_min();
    if (track_aux_) {
        d.aux_valid = true;
        d.f_min = *aux_f_.begin();
        d.g_min = *aux_g_.begin();
        d.b_min = *aux_b_.begin();
        d.mm_min = *aux_mm_.begin();
    }
    return d;
}

void Frontier::aux_insert(const NodeRec& r) {
    AuxValues v = aux_values(r);
    aux_f_.insert(v.f);
    aux_g_.insert(v.g);
    aux_b_.insert(v.b);
    aux_mm_.insert(v.mm);
}

void Frontier::aux_erase(const NodeRec& r) {
    AuxValues v = aux_values(r);
    aux_f_.erase(aux_f_.find(v.f));
    aux_g_.erase(aux_g_.find(v.g));
    aux_b_.erase(aux_b_.find(v.b));
    aux_mm_.erase(aux_mm_.find(v.mm));
}

void Frontier::check_coherence() const {
    if (!track_aux_) return;
    if (aux_f_.size() != open_count_ || aux_g_.size() != open_count_ ||
        aux_b_.size() != open_count_ || aux_mm_.size() != open_count_)
        throw std::logic_error("frontier: aux multiset cardinality mismatch");
    std::size_t open_seen = 0;
    bool any = false;
    Cost f = 0, g = 0, b = 0, mm = 0;
    for (const auto& [s, rec] : by_state_) {
        if (rec.status != NodeStatus::Open) continue;
        ++open_seen;
        AuxValues v = aux_values(rec);
        if (!any) {
            f = v.f; g = v.g; b = v.b; mm = v.mm;
            any = true;
        } else {
            f = std::min(f, v.f);
            g = std::min(g, v.g);
            b = std::min(b, v.b);
            mm = std::min(mm, v.mm);
        }
    }
    if (open_seen != open_count_)
        throw std::logic_error("frontier: open count mismatch");
    if (any && (f != *aux_f_.begin() || g != *aux_g_.begin() ||
                b != *aux_b_.begin() || mm != *aux_mm_.begin()))
        throw std::logic_error("frontier: aux minimum mismatch");
}

} // namespace bss
