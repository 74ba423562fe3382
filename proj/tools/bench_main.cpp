#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "bss/bench/csv.hpp"
#include "bss/bench/runner.hpp"
#include "bss/bench/tuner.hpp"
#include "bss/pdb.hpp"

namespace {

using namespace bss;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

std::vector<Rational> parse_weights(const std::string& text) {
    if (text == "all" || text.empty()) return default_weight_list();
    std::vector<Rational> out;
    for (const std::string& t : split_list(text)) out.push_back(Rational::parse(t));
    return out;
}

std::vector<LambdaChoice> parse_lambdas(const std::string& text) {
    std::vector<LambdaChoice> out;
    for (const std::string& t : split_list(text)) {
        if (t == "presets") {
            for (LambdaSpec s : preset_lambda_specs()) out.push_back({s, Rational(0)});
        } else if (t == "0" || t == "zero") {
            out.push_back({LambdaSpec::Zero, Rational(0)});
        } else if (t == "1/W^2" || t == "1/W2" || t == "invw2") {
            out.push_back({LambdaSpec::InvW2, Rational(0)});
        } else if (t == "1/W" || t == "invw") {
            out.push_back({LambdaSpec::InvW, Rational(0)});
        } else if (t == "1" || t == "one") {
            out.push_back({LambdaSpec::One, Rational(0)});
        } else if (t == "W" || t == "w") {
            out.push_back({LambdaSpec::W, Rational(0)});
        } else {
            out.push_back({LambdaSpec::Value, Rational::parse(t)});
        }
    }
    if (out.empty()) out.push_back({LambdaSpec::One, Rational(0)});
    return out;
}

std::string env_pdb_cache() {
    const char* dir = std::getenv("BSS_PDB_CACHE");
    return dir ? dir : "";
}

std::uint64_t node_limit_for_gb(double gb) {
    // Rough per-stored-state budget: node record + hash bucket + heap slots.
    return static_cast<std::uint64_t>(gb * (double(1) * 1024 * 1024 * 1024) / 150.0);
}

int run_command(const std::string& domain_name, const std::string& heuristic, int n,
                const std::string& map_file, double density, const std::string& algs,
                const std::string& weights, const std::string& lambdas, const std::string& bounds,
                const std::string& instances, const std::string& oracle_mode,
                std::uint64_t oracle_budget, const std::string& out_csv, double timeout,
                double mem_gb, int jobs, bool check_invariants, bool quiet) {
    ExperimentSpec spec;
    spec.domain.kind = parse_domain_kind(domain_name);
    spec.domain.heuristic = heuristic;
    spec.domain.n = n;
    spec.domain.map_file = map_file;
    spec.domain.obstacle_density = density;
    spec.domain.pdb_cache_dir = env_pdb_cache();
    spec.instances = InstanceSource::parse(instances);
    spec.algorithms.clear();
    for (const std::string& a : split_list(algs)) spec.algorithms.push_back(parse_algorithm(a));
    if (spec.algorithms.empty()) throw std::invalid_argument("no algorithms given");
    spec.weights = parse_weights(weights);
    spec.lambdas = parse_lambdas(lambdas);
    spec.bounds.clear();
    for (const std::string& b : split_list(bounds)) spec.bounds.push_back(parse_bound_variant(b));
    if (spec.bounds.empty()) spec.bounds.push_back(BoundVariant::Gcd);
    spec.oracle = oracle_mode != "off";
    spec.oracle_budget = oracle_budget;
    spec.timeout_sec = timeout;
    spec.node_limit = node_limit_for_gb(mem_gb);
    spec.jobs = jobs;
    spec.check_invariants = check_invariants;

    std::vector<RunRecord> records = run_matrix(spec);
    if (!out_csv.empty()) emit_csv(records, out_csv);
    if (!quiet) {
        emit_summary(records, std::cout);
        if (!out_csv.empty()) std::cout << records.size() << " records written to " << out_csv << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bidirectional bounded-suboptimal search benchmark"};
    app.require_subcommand(1);

    // run
    std::string domain = "pancake", heuristic, map_file, algs = "wbae";
    std::string weights = "all", lambdas = "1", bounds = "gcd";
    std::string instances = "gen:1:10", oracle_mode = "on", out_csv;
    int n = 0, jobs = 1;
    double timeout = 60, mem_gb = 4, density = 0.3;
    std::uint64_t oracle_budget = 2'000'000;
    bool check_invariants = false, quiet = false;

    CLI::App* run = app.add_subcommand("run", "Run an experiment matrix and emit CSV");
    run->add_option("--domain", domain, "stp | stp-heavy | pancake | toh | grid");
    run->add_option("--heuristic", heuristic,
                    "md | md4 (stp), gap | gap-1 | gap-2 (pancake), pdb:A+B (toh), octile (grid)");
    run->add_option("--n", n, "board side / pancakes / disks / synthetic grid side");
    run->add_option("--map", map_file, "grid map file (.map)");
    run->add_option("--density", density, "synthetic grid obstacle density");
    run->add_option("--alg", algs, "comma list: wastar,bwa,wbs,wmm,wbae");
    run->add_option("--weights", weights, "comma list of W values (exact rationals), or 'all'");
    run->add_option("--lambda", lambdas, "comma list: presets | 0 | 1/W^2 | 1/W | 1 | W | <value>");
    run->add_option("--bound", bounds, "comma list: base | gcd | alb | alb-gcd");
    run->add_option("--instances", instances, "gen:<seed>:<count>[:<hardness>] or a file path");
    run->add_option("--oracle", oracle_mode, "on | off: compute C* per instance");
    run->add_option("--oracle-budget", oracle_budget, "oracle stored-state budget");
    run->add_option("--out", out_csv, "CSV output path");
    run->add_option("--timeout", timeout, "per-run time limit in seconds");
    run->add_option("--mem-gb", mem_gb, "approximate per-run memory cap in GiB");
    run->add_option("--jobs", jobs, "parallel worker count");
    run->add_flag("--check-invariants", check_invariants, "enable runtime invariant counters");
    run->add_flag("--quiet", quiet, "suppress the summary table");

    // tune
    int trials = 50;
    std::uint64_t seed = 1;
    std::string tune_weight = "1.5";
    CLI::App* tune = app.add_subcommand("tune", "Random-search the WBAE* lambda on a tuning set");
    tune->add_option("--domain", domain, "stp | stp-heavy | pancake | toh | grid");
    tune->add_option("--heuristic", heuristic, "heuristic variant");
    tune->add_option("--n", n, "domain size parameter");
    tune->add_option("--map", map_file, "grid map file");
    tune->add_option("--density", density, "synthetic grid obstacle density");
    tune->add_option("-W,--weight", tune_weight, "suboptimality bound W");
    tune->add_option("--bound", bounds, "bound variant for tuning runs");
    tune->add_option("--instances", instances,
                     "tuning instances (disjoint from any test set), gen:<seed>:<count>[:<hardness>]");
    tune->add_option("--trials", trials, "number of sampled lambda candidates");
    tune->add_option("--seed", seed, "random-search seed");
    tune->add_option("--timeout", timeout, "per-run time limit in seconds");
    tune->add_option("--mem-gb", mem_gb, "approximate per-run memory cap in GiB");
    tune->add_option("--jobs", jobs, "parallel worker count");

    // pdb-build
    int disks = 12;
    std::string partition = "6+6", cache_dir, anchor = "goal";
    CLI::App* pdb = app.add_subcommand("pdb-build", "Build ToH PDB tables into the cache");
    pdb->add_option("--disks", disks, "number of disks");
    pdb->add_option("--partition", partition, "A+B additive split");
    pdb->add_option("--cache-dir", cache_dir, "cache directory (default $BSS_PDB_CACHE or ./pdb_cache)");
    pdb->add_option("--anchor", anchor, "'goal' (all disks on the last peg) or a peg list");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_command(domain, heuristic, n, map_file, density, algs, weights, lambdas,
                               bounds, instances, oracle_mode, oracle_budget, out_csv, timeout,
                               mem_gb, jobs, check_invariants, quiet);
        }
        if (tune->parsed()) {
            bss::DomainSpec dspec;
            dspec.kind = bss::parse_domain_kind(domain);
            dspec.heuristic = heuristic;
            dspec.n = n;
            dspec.map_file = map_file;
            dspec.obstacle_density = density;
            dspec.pdb_cache_dir = env_pdb_cache();
            auto pool = bss::load_instances(dspec, bss::InstanceSource::parse(instances));
            bss::TuneSettings settings;
            settings.weight = bss::Rational::parse(tune_weight);
            settings.bound = bss::parse_bound_variant(split_list(bounds).at(0));
            settings.timeout_sec = timeout;
            settings.node_limit = node_limit_for_gb(mem_gb);
            settings.jobs = jobs;
            bss::TuneOutcome outcome = bss::tune_lambda(pool, settings, trials, seed);
            std::cout << "lambda* = " << outcome.best_lambda.to_string() << " ("
                      << outcome.best_lambda.to_double() << ")\n"
                      << "mean expansions on tuning set = " << outcome.best_mean(pool.size())
                      << " over " << outcome.trials.size() << " trials\n";
            return 0;
        }
        if (pdb->parsed()) {
            if (cache_dir.empty()) cache_dir = env_pdb_cache();
            if (cache_dir.empty()) cache_dir = "pdb_cache";
            auto plus = partition.find('+');
            if (plus == std::string::npos)
                throw std::invalid_argument("partition must look like A+B");
            int a = std::stoi(partition.substr(0, plus));
            int b = std::stoi(partition.substr(plus + 1));
            bss::TohState anchor_state;
            if (anchor == "goal") {
                anchor_state = bss::toh_all_on_peg(disks, bss::kTohPegs - 1);
            } else {
                std::vector<std::string> pegs = split_list(anchor);
                if (static_cast<int>(pegs.size()) != disks)
                    throw std::invalid_argument("anchor peg list must have one peg per disk");
                anchor_state.n = disks;
                for (int d = 0; d < disks; ++d)
                    anchor_state.pegs[d] = static_cast<std::uint8_t>(std::stoi(pegs[d]));
            }
            for (const auto& group : bss::partition_groups(disks, a, b)) {
                auto table = bss::get_pdb(disks, group, anchor_state, cache_dir);
                std::cout << "built " << bss::pdb_cache_file_name(disks, *table) << " ("
                          << table->entries().size() << " entries) in " << cache_dir << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
