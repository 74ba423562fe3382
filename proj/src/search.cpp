#include "bss/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace bss {

namespace {

bool needs_aux(const SearchConfig& cfg) {
    return cfg.bound_variant == BoundVariant::Alb ||
           cfg.bound_variant == BoundVariant::AlbGcd || cfg.check_invariants;
}

} // namespace

BiSearch::BiSearch(const SearchConfig& cfg, const Domain& domain, const DomainInstance& inst)
    : cfg_(cfg),
      domain_(domain),
      inst_(inst),
      key_(cfg.algorithm, cfg.weight, cfg.lambda),
      forward_(needs_aux(cfg)),
      backward_(needs_aux(cfg)) {
    cfg_.validate();

    Cost hf = domain_.h_forward(inst_.start);
    Cost hb = domain_.h_backward(inst_.start);
    RationalKey k = key_(0, hf, hb);
    forward_.relax(inst_.start, 0, hf, hb, k, nullptr);
    note_insertion(0, hf, hb, k);

    hb = domain_.h_backward(inst_.goal);
    hf = domain_.h_forward(inst_.goal);
    k = key_(0, hb, hf);
    backward_.relax(inst_.goal, 0, hb, hf, k, nullptr);
    note_insertion(0, hb, hf, k);

    if (inst_.start == inst_.goal) {
        u_ = 0;
        u_valid_ = true;
        meet_ = inst_.start;
        meet_valid_ = true;
    }
}

void BiSearch::note_insertion(Cost g, Cost h_same, Cost h_opp, const RationalKey& key) {
    if (!cfg_.check_invariants || cfg_.algorithm != Algorithm::WBAE) return;
    Cost b = checked_add(checked_add(g, h_same), g - h_opp);
    if (cfg_.weight * Rational(b) < key) ++result_.priority_bound_violations;
}

void BiSearch::update_bound() {
    BoundState bs{forward_.bound_stats(), backward_.bound_stats()};
    RationalKey instant = compute_bound(cfg_.algorithm, bs, cfg_);
    if (cfg_.check_invariants) {
        RationalKey base = lower_bound(cfg_.algorithm, bs, cfg_);
        result_.max_base_bound = rational_max(result_.max_base_bound, base);
        if (bs.forward.aux_valid && bs.backward.aux_valid) {
            if (alb_bound(cfg_.algorithm, bs, cfg_) < base) ++result_.alb_dominance_violations;
        }
        if (cfg_.bound_safety_reference && *cfg_.bound_safety_reference < base &&
            (!u_valid_ || *cfg_.bound_safety_reference < Rational(u_)))
            ++result_.bound_safety_violations;
        if ((result_.iterations & 1023) == 0) {
            forward_.check_coherence();
            backward_.check_coherence();
        }
    }
    // The instantaneous bound can dip after an expansion for W > 1; the
    // effective bound is the running max, every sample being a valid lower
    // bound on W * C*.
    lb_ = rational_max(lb_, instant);
}

bool BiSearch::loop_would_exit() {
    if (forward_.empty() || backward_.empty()) return true;
    update_bound();
    return u_valid_ && !(Rational(u_) > lb_);
}

Dir BiSearch::next_direction() {
    if (cfg_.algorithm == Algorithm::WAstar) return Dir::F;
    return choose_direction(cfg_.direction_policy, last_dir_,
                            forward_.open_count(), backward_.open_count(),
                            forward_.weighted_min(), backward_.weighted_min());
}

void BiSearch::expand_best(Dir d) {
    Frontier& own = frontier(d);
    Frontier& opp = frontier(opposite(d));
    Frontier::Popped n = own.pop_best();
    last_dir_ = d;
    if (d == Dir::F) {
        ++result_.expansions_f;
        result_.max_expanded_g_f = std::max(result_.max_expanded_g_f, n.rec.g);
    } else {
        ++result_.expansions_b;
        result_.max_expanded_g_b = std::max(result_.max_expanded_g_b, n.rec.g);
    }
    if (n.rec.expansions > 1) ++result_.reexpansions;

    bool opp_closed = false;
    if (cfg_.algorithm == Algorithm::WBS) {
        const NodeRec* o = opp.find(n.state);
        opp_closed = o != nullptr && o->status == NodeStatus::Closed;
    }

    succ_buf_.clear();
    domain_.successors(n.state, succ_buf_);
    for (const Successor& sc : succ_buf_) {
        ++result_.generated;
        Cost tentative = checked_add(n.rec.g, sc.cost);
        const NodeRec* existing = own.find(sc.state);
        if (existing != nullptr) {
            if (existing->status == NodeStatus::Closed) continue;   // never reopened
            if (existing->g <= tentative) continue;
        }
        Cost hs, ho;
        if (existing != nullptr) {
            hs = existing->h_same;
            ho = existing->h_opp;
        } else if (d == Dir::F) {
            hs = domain_.h_forward(sc.state);
            ho = domain_.h_backward(sc.state);
        } else {
            hs = domain_.h_backward(sc.state);
            ho = domain_.h_forward(sc.state);
        }
        RationalKey k = key_(tentative, hs, ho);
        if (cfg_.algorithm == Algorithm::WBS && wbs_prune(k, u_valid_, u_, opp_closed)) continue;
        own.relax(sc.state, tentative, hs, ho, k, &n.state);
        note_insertion(tentative, hs, ho, k);

        if (const NodeRec* o = opp.find(sc.state)) {
            Cost cand = checked_add(tentative, o->g);
            if (!u_valid_ || cand < u_) {
                u_ = cand;
                u_valid_ = true;
                meet_ = sc.state;
                meet_valid_ = true;
            }
        }
    }
}

std::vector<PackedState> BiSearch::reconstruct_path() const {
    if (!meet_valid_) throw std::logic_error("reconstruct_path: no meeting state");
    std::vector<PackedState> path;
    const NodeRec* rec = forward_.find(meet_);
    if (rec == nullptr) throw std::logic_error("reconstruct_path: meeting state unreached forward");
    PackedState cur = meet_;
    while (true) {
        path.push_back(cur);
        rec = forward_.find(cur);
        if (rec == nullptr) throw std::logic_error("reconstruct_path: broken forward parent chain");
        if (!rec->has_parent) break;
        cur = rec->parent;
    }
    std::reverse(path.begin(), path.end());
    rec = backward_.find(meet_);
    if (rec == nullptr) throw std::logic_error("reconstruct_path: meeting state unreached backward");
    while (rec->has_parent) {
        path.push_back(rec->parent);
        rec = backward_.find(rec->parent);
        if (rec == nullptr) throw std::logic_error("reconstruct_path: broken backward parent chain");
    }
    return path;
}

SearchResult BiSearch::run() {
    using Clock = std::chrono::steady_clock;
    const auto start_time = Clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start_time).count(); };

    SearchStatus status = SearchStatus::Unsolvable;
    while (true) {
        if (forward_.empty() || backward_.empty()) {
            // A drained frontier proves no better solution exists; any
            // incumbent is final.
            if (u_valid_) {
                status = SearchStatus::Solved;
                lb_ = rational_max(lb_, Rational(u_));
            }
            break;
        }
        update_bound();
        if (u_valid_ && !(Rational(u_) > lb_)) {
            status = SearchStatus::Solved;
            break;
        }
        if (cfg_.limits.node_limit != 0 &&
            forward_.stored_states() + backward_.stored_states() > cfg_.limits.node_limit) {
            status = SearchStatus::MemOut;
            break;
        }
        if (cfg_.limits.time_limit_sec > 0 && (result_.iterations & 63) == 0 &&
            elapsed() > cfg_.limits.time_limit_sec) {
            status = SearchStatus::Timeout;
            break;
        }
        expand_best(next_direction());
        ++result_.iterations;
    }

    result_.status = status;
    result_.terminal_lb = lb_;
    if (u_valid_) {
        result_.cost = u_;
        if (status == SearchStatus::Solved) {
            result_.path = reconstruct_path();
            if (cfg_.check_invariants && path_cost(domain_, result_.path) != u_)
                throw std::logic_error("search: path cost does not match incumbent");
        }
    }
    result_.wall_seconds = elapsed();
    return result_;
}

SearchResult run_search(const SearchConfig& cfg, const Domain& domain, const DomainInstance& inst) {
    BiSearch search(cfg, domain, inst);
    return search.run();
}

Cost path_cost(const Domain& domain, const std::vector<PackedState>& path) {
    Cost total = 0;
    std::vector<Successor> succ;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        succ.clear();
        domain.successors(path[i], succ);
        // cheapest matching edge: relaxation always keeps the smaller g, so
        // parallel edges contribute their minimum
        Cost best = kMaxCost;
        for (const Successor& s : succ)
            if (s.state == path[i + 1] && s.cost < best) best = s.cost;
        if (best == kMaxCost) throw std::logic_error("path_cost: illegal transition in path");
        total = checked_add(total, best);
    }
    return total;
}

} // namespace bss
