#pragma once

#include "bss/config.hpp"
#include "bss/cost.hpp"
#include "bss/rational.hpp"

namespace bss {

// Priority keys, exact over a common denominator.
//
// All key values are non-negative for admissible inputs; key_wbae admits
// d = g - hOpp < 0 arithmetically but consistent heuristics keep d >= 0
// along expanded paths.

// g + W*h
RationalKey key_wastar(Cost g, Cost h, const Rational& w);

// Per-direction form of the same function.
inline RationalKey key_bwa(Cost g, Cost h, const Rational& w) { return key_wastar(g, h, w); }

// g + max(g, W*h)
RationalKey key_wmm(Cost g, Cost h, const Rational& w);

// g + W*hSame + lambda*(g - hOpp)
RationalKey key_wbae(Cost g, Cost hSame, Cost hOpp, const Rational& w, const Rational& lambda);

// Precomputed integer coefficients for the hot path: fixed denominator,
// no gcd per node. Throws std::overflow_error if a key leaves int64 range.
class KeyCalc {
public:
    KeyCalc() = default;
    KeyCalc(Algorithm alg, const Rational& w, const Rational& lambda);

    RationalKey operator()(Cost g, Cost hSame, Cost hOpp) const;

private:
    Algorithm alg_ = Algorithm::WBAE;
    std::int64_t wn_ = 1, wd_ = 1;   // W
    std::int64_t ln_ = 0, ld_ = 1;   // lambda
    std::int64_t den_ = 1;
};

// Per-direction frontier statistics consumed by the bound computations.
// Weighted minima are always valid while the open list is nonempty; the
// unweighted minima (f, g, b, max(f,2g)) are valid only when the frontier
// tracks them (ALB variants and invariant-checking runs).
struct DirBound {
    bool open_nonempty = false;
    RationalKey weighted_min{0};
    bool aux_valid = false;
    Cost f_min = 0;
    Cost g_min = 0;
    Cost b_min = 0;
    Cost mm_min = 0;   // min over open of max(f, 2g)
};

struct BoundState {
    DirBound forward;
    DirBound backward;
};

// Base lower bound on W * C*:
//   WA*          prWMin of the forward list
//   BWA*, WBS*   max(prWMin_F, prWMin_B)
//   WMM          min weighted key across both lists
//   WBAE*        (bWMin_F + bWMin_B) / 2
// Requires both open lists nonempty (the search loop exits before the bound
// is needed otherwise).
RationalKey lower_bound(Algorithm alg, const BoundState& bs, const SearchConfig& cfg);

// Alternative lower bound: W times the corresponding optimal variant's
// bound. Requires the auxiliary unweighted minima.
//   WA*          W * fMin_F
//   BWA*, WBS*   W * max(fMin_F, fMin_B)
//   WMM          W * max(mmMin, fMin_F, fMin_B, gMin_F + gMin_B + epsilon)
//   WBAE*        W * (bMin_F + bMin_B) / 2
RationalKey alb_bound(Algorithm alg, const BoundState& bs, const SearchConfig& cfg);

// Rounds a lower bound up to the next multiple of iota*W; solution costs
// only occur in multiples of the edge-cost GCD iota, so W-scaled bounds only
// occur in multiples of iota*W.
RationalKey gcd_round(const RationalKey& lb, Cost iota, const Rational& w);

// Composed bound for the configured variant: base and ALB are combined by
// max where both are enabled, and GCD rounding is applied last.
RationalKey compute_bound(Algorithm alg, const BoundState& bs, const SearchConfig& cfg);

enum class Dir : std::uint8_t { F = 0, B = 1 };

inline Dir opposite(Dir d) { return d == Dir::F ? Dir::B : Dir::F; }

// Direction selection. Ties resolve to forward.
//   Alternate    opposite of the last expanded direction (first pick F)
//   Cardinality  the side with fewer open nodes
//   GlobalMin    the side holding the globally minimal weighted key
Dir choose_direction(DirectionPolicy policy, Dir last_direction,
                     std::size_t open_count_f, std::size_t open_count_b,
                     const RationalKey& weighted_min_f, const RationalKey& weighted_min_b);

// WBS* successor pruning: discard when the expanding node's state is closed
// in the opposite direction (nipping) or when the successor's key cannot
// beat the incumbent (trimming). `u_valid` is false while no solution is
// known.
bool wbs_prune(const RationalKey& succ_key, bool u_valid, Cost u, bool opp_closed);

} // namespace bss
