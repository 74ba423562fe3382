#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bss/domain.hpp"

namespace bss {

// Deterministic RNG wrapper. Bounded draws use rejection sampling so the
// sequence does not depend on the standard library's distribution
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("rng: empty range");
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[next_below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

enum class DomainKind { Stp, StpHeavy, Pancake, Toh, Grid };

DomainKind parse_domain_kind(const std::string& s);
const char* to_string(DomainKind k);

struct DomainSpec {
    DomainKind kind = DomainKind::Pancake;
    int n = 0;                      // board side / pancakes / disks / synthetic grid side
    std::string heuristic;          // md, md4, gap, gap-1, gap-2, pdb:A+B, octile
    std::string map_file;           // grid: external map (with a scenario or generated pairs)
    std::string scen_file;          // grid: scenario file
    double obstacle_density = 0.3;  // synthetic grids
    std::string pdb_cache_dir;      // ToH PDB cache; empty builds in memory

    int default_n() const;
    std::string label() const;      // for CSV "domain" column
};

// Instance source: "gen:<seed>:<count>[:<hardness>]" or a file path.
struct InstanceSource {
    bool generated = true;
    std::uint64_t seed = 1;
    int count = 1;
    int hardness = -1;   // -1: domain default
    std::string file;

    static InstanceSource parse(const std::string& text);
};

// A search-ready instance: the domain object carries the instance-anchored
// heuristics, shareable read-only across concurrent runs.
struct ProblemSetup {
    std::shared_ptr<const Domain> domain;
    DomainInstance instance;
};

// Reproducible instance pools. Pancake draws uniform random permutations,
// ToH uniform random legal peg assignments with the canonical all-on-last-
// peg goal, STP random-walk scrambles of length `hardness` from the goal,
// and synthetic grids random connected (start, goal) pairs on a seeded
// obstacle map. File sources load the same formats the CLI documents.
std::vector<ProblemSetup> load_instances(const DomainSpec& spec, const InstanceSource& source);

} // namespace bss
