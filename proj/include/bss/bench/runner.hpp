#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bss/bench/instances.hpp"
#include "bss/config.hpp"
#include "bss/search.hpp"

namespace bss {

inline std::vector<Rational> default_weight_list() {
    return {Rational(1),      Rational(11, 10), Rational(12, 10),
            Rational(15, 10), Rational(17, 10), Rational(2),
            Rational(3),      Rational(5),      Rational(10)};
}

inline std::vector<LambdaSpec> preset_lambda_specs() {
    return {LambdaSpec::Zero, LambdaSpec::InvW2, LambdaSpec::InvW, LambdaSpec::One, LambdaSpec::W};
}

struct LambdaChoice {
    LambdaSpec spec = LambdaSpec::Zero;
    Rational value{0};   // used when spec == Value

    Rational resolve(const Rational& w) const { return resolve_lambda(spec, w, value); }
    std::string label() const {
        return spec == LambdaSpec::Value ? value.to_string() : to_string(spec);
    }
};

struct ExperimentSpec {
    DomainSpec domain;
    InstanceSource instances;
    std::vector<Algorithm> algorithms{Algorithm::WBAE};
    std::vector<Rational> weights = default_weight_list();
    std::vector<LambdaChoice> lambdas{{LambdaSpec::One, Rational(0)}};
    std::vector<BoundVariant> bounds{BoundVariant::Gcd};
    bool oracle = true;
    std::uint64_t oracle_budget = 2'000'000;
    double timeout_sec = 60;
    std::uint64_t node_limit = 28'000'000;   // ~4 GiB at ~150 bytes/state
    int jobs = 1;
    bool check_invariants = false;
};

struct RunRecord {
    std::string domain;
    std::string heuristic;
    Algorithm algorithm = Algorithm::WBAE;
    Rational weight{1};
    LambdaChoice lambda_choice;
    Rational lambda{0};
    BoundVariant bound = BoundVariant::Base;
    std::string instance_id;
    SearchStatus status = SearchStatus::Unsolvable;
    std::optional<Cost> cost;
    std::optional<Cost> cstar;
    std::optional<double> quality;
    std::uint64_t expansions_f = 0;
    std::uint64_t expansions_b = 0;
    std::uint64_t generated = 0;
    RationalKey terminal_lb{0};
    double wall_ms = 0;
    // Carried for invariant-checking consumers; not part of the CSV schema.
    std::uint64_t priority_bound_violations = 0;
    std::uint64_t reexpansions = 0;
    std::uint64_t alb_dominance_violations = 0;
    Cost max_expanded_g_f = 0;
    Cost max_expanded_g_b = 0;

    std::uint64_t expansions() const { return expansions_f + expansions_b; }
};

const char* to_string(SearchStatus s);

// Runs the full (instance x algorithm x W x lambda x bound) matrix; one
// record per cell, in deterministic cell order regardless of `jobs`.
// Lambda only varies for WBAE*; other algorithms run one cell per
// (instance, W, bound). C* is computed once per instance when the oracle is
// enabled.
std::vector<RunRecord> run_matrix(const ExperimentSpec& spec);
std::vector<RunRecord> run_matrix(const ExperimentSpec& spec,
                                  const std::vector<ProblemSetup>& problems);

} // namespace bss
