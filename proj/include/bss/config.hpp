#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bss/cost.hpp"
#include "bss/rational.hpp"

namespace bss {

enum class Algorithm { WAstar, BWA, WBS, WMM, WBAE };

enum class DirectionPolicy { Alternate, Cardinality, GlobalMin };

enum class BoundVariant { Base, Gcd, Alb, AlbGcd };

// The five named lambda settings evaluated in the benchmark, plus free
// rational values for tuning.
enum class LambdaSpec { Zero, InvW2, InvW, One, W, Value };

struct SearchLimits {
    double time_limit_sec = 0;        // 0: unlimited
    std::uint64_t node_limit = 0;     // stored-state cap, 0: unlimited
};

struct SearchConfig {
    Algorithm algorithm = Algorithm::WBAE;
    Rational weight{1};               // W >= 1
    Rational lambda{0};               // 0 <= lambda <= W, used by WBAE only
    DirectionPolicy direction_policy = DirectionPolicy::Alternate;
    BoundVariant bound_variant = BoundVariant::Base;
    Cost iota = 1;                    // edge-cost GCD (scaled units)
    Cost epsilon = 1;                 // minimum edge cost (scaled units)
    // Enables the per-insertion and per-iteration invariant counters
    // (priority-inflation bound, ALB dominance, frontier coherence sampling).
    bool check_invariants = false;
    // Test hook: when set (typically to W*C* from an oracle), every
    // iteration whose instantaneous base bound exceeds it while the
    // incumbent also exceeds it counts as a bound-safety violation.
    std::optional<Rational> bound_safety_reference;
    SearchLimits limits;

    void validate() const {
        if (weight < Rational(1))
            throw std::invalid_argument("search config: W must be >= 1");
        if (lambda < Rational(0) || weight < lambda)
            throw std::invalid_argument("search config: lambda must be in [0, W]");
        if (iota < 1) throw std::invalid_argument("search config: iota must be >= 1");
        if (epsilon < 1) throw std::invalid_argument("search config: epsilon must be >= 1");
    }
};

// Default direction policy per algorithm: WBS uses the cardinality
// criterion, WMM expands the globally minimal priority, everything else
// alternates. WA* always expands forward regardless of policy.
inline DirectionPolicy default_direction_policy(Algorithm a) {
    switch (a) {
        case Algorithm::WBS: return DirectionPolicy::Cardinality;
        case Algorithm::WMM: return DirectionPolicy::GlobalMin;
        default: return DirectionPolicy::Alternate;
    }
}

inline SearchConfig make_config(Algorithm a, const Rational& w, const Rational& lambda = Rational(0)) {
    SearchConfig cfg;
    cfg.algorithm = a;
    cfg.weight = w;
    cfg.lambda = lambda;
    cfg.direction_policy = default_direction_policy(a);
    return cfg;
}

// Resolves a lambda spec against a concrete W.
inline Rational resolve_lambda(LambdaSpec spec, const Rational& w, const Rational& value = Rational(0)) {
    switch (spec) {
        case LambdaSpec::Zero: return Rational(0);
        case LambdaSpec::InvW2: return Rational(1) / (w * w);
        case LambdaSpec::InvW: return Rational(1) / w;
        case LambdaSpec::One: return Rational(1);
        case LambdaSpec::W: return w;
        case LambdaSpec::Value: return value;
    }
    return Rational(0);
}

const char* to_string(Algorithm a);
const char* to_string(BoundVariant v);
const char* to_string(DirectionPolicy p);
const char* to_string(LambdaSpec s);
Algorithm parse_algorithm(const std::string& s);
BoundVariant parse_bound_variant(const std::string& s);

} // namespace bss
