#include "bss/bench/runner.hpp"

#include <atomic>
#include <thread>

#include "bss/oracle.hpp"

namespace bss {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Solved: return "ok";
        case SearchStatus::Unsolvable: return "unsolvable";
        case SearchStatus::Timeout: return "timeout";
        case SearchStatus::MemOut: return "memout";
    }
    return "?";
}

namespace {

struct Cell {
    std::size_t problem;
    Algorithm algorithm;
    Rational weight;
    LambdaChoice lambda;
    BoundVariant bound;
};

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> threads;
    int spawn = std::min<std::size_t>(jobs, count);
    threads.reserve(spawn);
    for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
}

} // namespace

std::vector<RunRecord> run_matrix(const ExperimentSpec& spec,
                                  const std::vector<ProblemSetup>& problems) {
    // C* once per instance, reused by every config cell.
    std::vector<std::optional<Cost>> cstar(problems.size());
    if (spec.oracle) {
        parallel_for(problems.size(), spec.jobs, [&](std::size_t i) {
            OracleResult r = optimal_cost(*problems[i].domain, problems[i].instance,
                                          spec.oracle_budget);
            if (r.status == OracleResult::Status::Solved) cstar[i] = r.cost;
        });
    }

    std::vector<Cell> cells;
    std::vector<LambdaChoice> single{{LambdaSpec::Zero, Rational(0)}};
    for (std::size_t i = 0; i < problems.size(); ++i)
        for (Algorithm alg : spec.algorithms)
            for (const Rational& w : spec.weights)
                for (const LambdaChoice& l : alg == Algorithm::WBAE ? spec.lambdas : single)
                    for (BoundVariant bv : spec.bounds)
                        cells.push_back({i, alg, w, l, bv});

    std::vector<RunRecord> records(cells.size());
    std::string heuristic_label = spec.domain.heuristic.empty() ? "default" : spec.domain.heuristic;
    std::string domain_label = spec.domain.label();

    parallel_for(cells.size(), spec.jobs, [&](std::size_t i) {
        const Cell& cell = cells[i];
        const ProblemSetup& problem = problems[cell.problem];
        SearchConfig cfg = make_config(cell.algorithm, cell.weight, cell.lambda.resolve(cell.weight));
        cfg.bound_variant = cell.bound;
        cfg.iota = problem.domain->edge_cost_gcd();
        cfg.epsilon = problem.domain->min_edge_cost();
        cfg.check_invariants = spec.check_invariants;
        cfg.limits.time_limit_sec = spec.timeout_sec;
        cfg.limits.node_limit = spec.node_limit;

        SearchResult result = run_search(cfg, *problem.domain, problem.instance);

        RunRecord& rec = records[i];
        rec.domain = domain_label;
        rec.heuristic = heuristic_label;
        rec.algorithm = cell.algorithm;
        rec.weight = cell.weight;
        rec.lambda_choice = cell.lambda;
        rec.lambda = cfg.lambda;
        rec.bound = cell.bound;
        rec.instance_id = problem.instance.id;
        rec.status = result.status;
        rec.cost = result.cost;
        rec.cstar = cstar[cell.problem];
        if (result.status == SearchStatus::Solved && rec.cost && rec.cstar && *rec.cstar > 0)
            rec.quality = static_cast<double>(*rec.cost) / static_cast<double>(*rec.cstar);
        rec.expansions_f = result.expansions_f;
        rec.expansions_b = result.expansions_b;
        rec.generated = result.generated;
        rec.terminal_lb = result.terminal_lb;
        rec.wall_ms = result.wall_seconds * 1000.0;
        rec.priority_bound_violations = result.priority_bound_violations;
        rec.reexpansions = result.reexpansions;
        rec.alb_dominance_violations = result.alb_dominance_violations;
        rec.max_expanded_g_f = result.max_expanded_g_f;
        rec.max_expanded_g_b = result.max_expanded_g_b;
    });
    return records;
}

std::vector<RunRecord> run_matrix(const ExperimentSpec& spec) {
    return run_matrix(spec, load_instances(spec.domain, spec.instances));
}

} // namespace bss
