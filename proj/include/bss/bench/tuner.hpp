#pragma once

#include <cstdint>
#include <vector>

#include "bss/bench/instances.hpp"
#include "bss/config.hpp"
#include "bss/rational.hpp"

namespace bss {

struct TuneTrial {
    Rational lambda{0};
    std::uint64_t total_expansions = 0;
};

struct TuneOutcome {
    Rational best_lambda{0};
    std::uint64_t best_total_expansions = 0;
    std::vector<TuneTrial> trials;

    double best_mean(std::size_t instance_count) const {
        return static_cast<double>(best_total_expansions) / static_cast<double>(instance_count);
    }
};

struct TuneSettings {
    Rational weight{1};
    BoundVariant bound = BoundVariant::Gcd;
    double timeout_sec = 60;
    std::uint64_t node_limit = 28'000'000;
    int jobs = 1;
};

// Evaluates WBAE* with each candidate lambda over the tuning instances and
// returns the candidate with the smallest total expansions; ties go to the
// smaller lambda.
TuneOutcome tune_lambda_over(const std::vector<Rational>& candidates,
                             const std::vector<ProblemSetup>& tuning_instances,
                             const TuneSettings& settings);

// Seeded uniform random search over lambda in [0, W] at resolution 1e-4,
// executing exactly `trials` evaluation batches. The tuning instances must
// be disjoint from any test set; the caller controls that by seeding.
TuneOutcome tune_lambda(const std::vector<ProblemSetup>& tuning_instances,
                        const TuneSettings& settings, int trials, std::uint64_t seed);

} // namespace bss
