#include "bss/bench/tuner.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "bss/search.hpp"

namespace bss {

namespace {

constexpr std::int64_t kResolution = 10'000;

std::uint64_t evaluate(const Rational& lambda, const std::vector<ProblemSetup>& instances,
                       const TuneSettings& settings) {
    std::vector<std::uint64_t> expansions(instances.size(), 0);
    auto run_one = [&](std::size_t i) {
        SearchConfig cfg = make_config(Algorithm::WBAE, settings.weight, lambda);
        cfg.bound_variant = settings.bound;
        cfg.iota = instances[i].domain->edge_cost_gcd();
        cfg.epsilon = instances[i].domain->min_edge_cost();
        cfg.limits.time_limit_sec = settings.timeout_sec;
        cfg.limits.node_limit = settings.node_limit;
        SearchResult r = run_search(cfg, *instances[i].domain, instances[i].instance);
        expansions[i] = r.expansions_f + r.expansions_b;
    };
    if (settings.jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1))
                run_one(i);
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < settings.jobs; ++t) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t e : expansions) total += e;
    return total;
}

} // namespace

TuneOutcome tune_lambda_over(const std::vector<Rational>& candidates,
                             const std::vector<ProblemSetup>& tuning_instances,
                             const TuneSettings& settings) {
    if (candidates.empty()) throw std::invalid_argument("tuner: no candidates");
    if (tuning_instances.empty()) throw std::invalid_argument("tuner: no tuning instances");
    TuneOutcome outcome;
    bool first = true;
    for (const Rational& lambda : candidates) {
        std::uint64_t total = evaluate(lambda, tuning_instances, settings);
        outcome.trials.push_back({lambda, total});
        bool better = first || total < outcome.best_total_expansions ||
                      (total == outcome.best_total_expansions && lambda < outcome.best_lambda);
        if (better) {
            outcome.best_lambda = lambda;
            outcome.best_total_expansions = total;
        }
        first = false;
    }
    return outcome;
}

TuneOutcome tune_lambda(const std::vector<ProblemSetup>& tuning_instances,
                        const TuneSettings& settings, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("tuner: trials must be >= 1");
    // Lambda grid points k/1e4 for k in [0, W*1e4].
    __int128 span = static_cast<__int128>(settings.weight.num()) * kResolution /
                    settings.weight.den();
    std::uint64_t max_k = static_cast<std::uint64_t>(span);
    Rng rng(seed);
    std::vector<Rational> candidates;
    candidates.reserve(trials);
    for (int t = 0; t < trials; ++t)
        candidates.push_back(
            Rational(static_cast<std::int64_t>(rng.next_below(max_k + 1)), kResolution));
    return tune_lambda_over(candidates, tuning_instances, settings);
}

} // namespace bss
