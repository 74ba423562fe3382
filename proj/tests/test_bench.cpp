#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "bss/bench/csv.hpp"
#include "bss/bench/runner.hpp"
#include "bss/bench/tuner.hpp"
#include "bss/domains/pancake.hpp"
#include "bss/domains/stp.hpp"
#include "bss/oracle.hpp"

using namespace bss;

TEST_CASE("instance source parsing") {
    InstanceSource s = InstanceSource::parse("gen:42:10");
    CHECK(s.generated);
    CHECK(s.seed == 42);
    CHECK(s.count == 10);
    CHECK(s.hardness == -1);
    s = InstanceSource::parse("gen:7:5:30");
    CHECK(s.hardness == 30);
    s = InstanceSource::parse("instances.txt");
    CHECK(!s.generated);
    CHECK(s.file == "instances.txt");
    CHECK_THROWS(InstanceSource::parse("gen:1"));
    CHECK_THROWS(InstanceSource::parse("gen:1:0"));
}

TEST_CASE("generation is deterministic per seed") {
    DomainSpec spec;
    spec.kind = DomainKind::Pancake;
    spec.n = 8;
    InstanceSource src = InstanceSource::parse("gen:9:10");
    auto a = load_instances(spec, src);
    auto b = load_instances(spec, src);
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance.start == b[i].instance.start);
        CHECK(a[i].instance.goal == b[i].instance.goal);
        CHECK(pancake_valid(pancake_unpack(a[i].instance.start, 8)));
    }
    auto c = load_instances(spec, InstanceSource::parse("gen:10:10"));
    bool all_same = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].instance.start == c[i].instance.start)) all_same = false;
    CHECK(!all_same);

    // 100 random 18-element permutations are pairwise distinct with
    // overwhelming odds (collisions at 8 elements are a real possibility)
    DomainSpec big_spec;
    big_spec.kind = DomainKind::Pancake;
    big_spec.n = 18;
    auto big = load_instances(big_spec, InstanceSource::parse("gen:12:100"));
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const auto& p : big) {
        CHECK(pancake_valid(pancake_unpack(p.instance.start, 18)));
        seen.insert({p.instance.start.lo, p.instance.start.hi});
    }
    CHECK(seen.size() == big.size());
}

TEST_CASE("zero-hardness scrambles start at the goal") {
    DomainSpec spec;
    spec.kind = DomainKind::Stp;
    spec.n = 3;
    auto pool = load_instances(spec, InstanceSource::parse("gen:5:3:0"));
    for (const auto& p : pool) CHECK(p.instance.start == p.instance.goal);
}

TEST_CASE("stp file loader accepts plain and indexed rows") {
    auto path = std::filesystem::temp_directory_path() / "bss_stp_instances.txt";
    {
        std::ofstream out(path);
        out << "1 2 0 3 4 5 6 7 8\n";             // plain row
        out << "7 1 2 0 3 4 5 6 7 8\n";           // leading instance number
        out << "# comment\n";
    }
    DomainSpec spec;
    spec.kind = DomainKind::Stp;
    spec.n = 3;
    InstanceSource src = InstanceSource::parse(path.string());
    auto pool = load_instances(spec, src);
    REQUIRE(pool.size() == 2);
    CHECK(pool[0].instance.start == pool[1].instance.start);

    {
        std::ofstream out(path);
        out << "1 2 3 4 5 6 7 8 8\n";   // not a permutation
    }
    CHECK_THROWS_AS(load_instances(spec, src), std::runtime_error);
    std::filesystem::remove(path);
}

TEST_CASE("matrix size and statuses account for every cell") {
    ExperimentSpec spec;
    spec.domain.kind = DomainKind::Pancake;
    spec.domain.n = 6;
    spec.instances = InstanceSource::parse("gen:3:2");
    spec.algorithms = {Algorithm::BWA, Algorithm::WBAE};
    spec.weights = {Rational(1), Rational(2)};
    spec.lambdas = {{LambdaSpec::Zero, Rational(0)}, {LambdaSpec::W, Rational(0)}};
    spec.bounds = {BoundVariant::Base, BoundVariant::Gcd};
    spec.oracle = true;

    auto records = run_matrix(spec);
    // BWA: 2W x 2bv = 4; WBAE: 2W x 2lambda x 2bv = 8; x 2 instances = 24
    CHECK(records.size() == 24);
    for (const RunRecord& r : records) {
        CHECK(r.status == SearchStatus::Solved);
        REQUIRE(r.cstar.has_value());
        REQUIRE(r.cost.has_value());
        REQUIRE(r.quality.has_value());
        CHECK(*r.quality <= r.weight.to_double() + 1e-12);
        CHECK(verify_bound(*r.cost, r.weight, *r.cstar));
        if (r.weight == Rational(1)) CHECK(*r.cost == *r.cstar);
    }

    // single cell
    spec.algorithms = {Algorithm::BWA};
    spec.weights = {Rational(1)};
    spec.bounds = {BoundVariant::Base};
    spec.instances = InstanceSource::parse("gen:3:1");
    CHECK(run_matrix(spec).size() == 1);

    // 2 instances x 2 algorithms x 9 weights, one lambda, one variant
    spec.algorithms = {Algorithm::BWA, Algorithm::WBAE};
    spec.weights = default_weight_list();
    spec.lambdas = {{LambdaSpec::One, Rational(0)}};
    spec.instances = InstanceSource::parse("gen:3:2");
    CHECK(run_matrix(spec).size() == 36);
}

TEST_CASE("random 8-puzzle pool stays within 2*C* under BWA at W=2") {
    ExperimentSpec spec;
    spec.domain.kind = DomainKind::Stp;
    spec.domain.n = 3;
    spec.instances = InstanceSource::parse("gen:31:100:400");
    spec.algorithms = {Algorithm::BWA};
    spec.weights = {Rational(2)};
    spec.bounds = {BoundVariant::Gcd};
    spec.oracle = true;
    spec.jobs = 2;
    auto records = run_matrix(spec);
    REQUIRE(records.size() == 100);
    for (const RunRecord& r : records) {
        REQUIRE(r.status == SearchStatus::Solved);
        REQUIRE(r.cstar.has_value());
        CHECK(verify_bound(*r.cost, Rational(2), *r.cstar));
    }
}

TEST_CASE("parallel execution yields the same records as serial") {
    ExperimentSpec spec;
    spec.domain.kind = DomainKind::Pancake;
    spec.domain.n = 7;
    spec.domain.heuristic = "gap-1";
    spec.instances = InstanceSource::parse("gen:8:6");
    spec.algorithms = {Algorithm::WAstar, Algorithm::WBAE};
    spec.weights = {Rational(1), Rational(3, 2)};
    spec.lambdas = {{LambdaSpec::InvW2, Rational(0)}};
    spec.bounds = {BoundVariant::Base, BoundVariant::AlbGcd};
    spec.jobs = 1;
    auto serial = run_matrix(spec);
    spec.jobs = 4;
    auto parallel = run_matrix(spec);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].instance_id == parallel[i].instance_id);
        CHECK(serial[i].expansions() == parallel[i].expansions());
        CHECK(serial[i].generated == parallel[i].generated);
        CHECK(serial[i].cost == parallel[i].cost);
        CHECK(serial[i].terminal_lb == parallel[i].terminal_lb);
    }
}

TEST_CASE("csv emission: header-only, round trip, determinism") {
    std::ostringstream empty;
    emit_csv({}, empty);
    CHECK(empty.str() == std::string(kCsvHeader) + "\n");

    ExperimentSpec spec;
    spec.domain.kind = DomainKind::Pancake;
    spec.domain.n = 6;
    spec.domain.heuristic = "gap-1";
    spec.instances = InstanceSource::parse("gen:11:3");
    spec.algorithms = {Algorithm::WBAE};
    spec.weights = {Rational(11, 10)};
    spec.lambdas = {{LambdaSpec::InvW, Rational(0)}};
    spec.bounds = {BoundVariant::AlbGcd};
    auto records = run_matrix(spec);

    std::ostringstream out;
    emit_csv(records, out);
    std::istringstream in(out.str());
    auto rows = parse_csv(in);
    REQUIRE(rows.size() == records.size() + 1);
    REQUIRE(rows[0].size() == 19);
    CHECK(rows[1][0] == "pancake-6");
    CHECK(rows[1][1] == "gap-1");
    CHECK(rows[1][2] == "wbae");
    CHECK(rows[1][3] == "10");   // lambda = 1/W = 10/11
    CHECK(rows[1][4] == "11");
    CHECK(rows[1][5] == "11");   // W = 11/10
    CHECK(rows[1][6] == "10");
    CHECK(rows[1][7] == "alb-gcd");
    CHECK(rows[1][9] == "ok");
    CHECK(rows[1][10] == std::to_string(*records[0].cost));

    // identical spec + seed: byte-identical except the wall_ms column
    auto records2 = run_matrix(spec);
    std::ostringstream out2;
    emit_csv(records2, out2);
    std::istringstream in2(out2.str());
    auto rows2 = parse_csv(in2);
    REQUIRE(rows2.size() == rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c + 1 < rows[r].size(); ++c)
            CHECK(rows[r][c] == rows2[r][c]);
}

TEST_CASE("summary aggregates means") {
    RunRecord a, b;
    a.algorithm = b.algorithm = Algorithm::BWA;
    a.expansions_f = 100;
    b.expansions_f = 300;
    a.wall_ms = b.wall_ms = 1.0;
    std::ostringstream out;
    emit_summary({a, b}, out);
    CHECK(out.str().find("200.0") != std::string::npos);
    CHECK_THROWS_AS(emit_summary({}, out), std::invalid_argument);
}

TEST_CASE("tuner: single candidate, dominance, and budget") {
    DomainSpec dspec;
    dspec.kind = DomainKind::Pancake;
    dspec.n = 6;
    dspec.heuristic = "gap-1";
    auto pool = load_instances(dspec, InstanceSource::parse("gen:21:8"));

    TuneSettings settings;
    settings.weight = Rational(3, 2);
    settings.bound = BoundVariant::Gcd;

    TuneOutcome single = tune_lambda_over({Rational(0)}, pool, settings);
    CHECK(single.best_lambda == Rational(0));
    CHECK(single.trials.size() == 1);

    // best-of returns the dominant candidate; ties go to the smaller lambda
    TuneOutcome pair = tune_lambda_over({Rational(1), Rational(0)}, pool, settings);
    std::uint64_t t1 = pair.trials[0].total_expansions;
    std::uint64_t t0 = pair.trials[1].total_expansions;
    if (t0 < t1) CHECK(pair.best_lambda == Rational(0));
    if (t1 < t0) CHECK(pair.best_lambda == Rational(1));
    if (t0 == t1) CHECK(pair.best_lambda == Rational(0));

    TuneOutcome random_search = tune_lambda(pool, settings, 12, 77);
    CHECK(random_search.trials.size() == 12);   // exactly `trials` batches
    for (const TuneTrial& t : random_search.trials) {
        CHECK(!(t.lambda < Rational(0)));
        CHECK(!(settings.weight < t.lambda));
        CHECK(t.lambda.den() <= 10000);
    }
    TuneOutcome again = tune_lambda(pool, settings, 12, 77);
    CHECK(again.best_lambda == random_search.best_lambda);
    CHECK(again.best_total_expansions == random_search.best_total_expansions);
}
