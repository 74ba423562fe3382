#include "bss/bench/instances.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bss/domains/grid.hpp"
#include "bss/domains/pancake.hpp"
#include "bss/domains/stp.hpp"
#include "bss/domains/toh.hpp"
#include "bss/pdb.hpp"

namespace bss {

DomainKind parse_domain_kind(const std::string& s) {
    if (s == "stp") return DomainKind::Stp;
    if (s == "stp-heavy") return DomainKind::StpHeavy;
    if (s == "pancake") return DomainKind::Pancake;
    if (s == "toh") return DomainKind::Toh;
    if (s == "grid") return DomainKind::Grid;
    throw std::invalid_argument("unknown domain: " + s);
}

const char* to_string(DomainKind k) {
    switch (k) {
        case DomainKind::Stp: return "stp";
        case DomainKind::StpHeavy: return "stp-heavy";
        case DomainKind::Pancake: return "pancake";
        case DomainKind::Toh: return "toh";
        case DomainKind::Grid: return "grid";
    }
    return "?";
}

int DomainSpec::default_n() const {
    switch (kind) {
        case DomainKind::Stp:
        case DomainKind::StpHeavy: return 4;
        case DomainKind::Pancake: return 18;
        case DomainKind::Toh: return 12;
        case DomainKind::Grid: return 20;
    }
    return 0;
}

std::string DomainSpec::label() const {
    int size = n > 0 ? n : default_n();
    switch (kind) {
        case DomainKind::Stp: return "stp-" + std::to_string(size);
        case DomainKind::StpHeavy: return "stp-heavy-" + std::to_string(size);
        case DomainKind::Pancake: return "pancake-" + std::to_string(size);
        case DomainKind::Toh: return "toh-" + std::to_string(size);
        case DomainKind::Grid: return map_file.empty() ? "grid-" + std::to_string(size) : "grid";
    }
    return "?";
}

InstanceSource InstanceSource::parse(const std::string& text) {
    InstanceSource src;
    if (text.rfind("gen:", 0) != 0) {
        src.generated = false;
        src.file = text;
        return src;
    }
    std::istringstream in(text.substr(4));
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(in, field, ':')) fields.push_back(field);
    if (fields.size() < 2 || fields.size() > 3)
        throw std::invalid_argument("instance source: expected gen:<seed>:<count>[:<hardness>]");
    src.seed = std::stoull(fields[0]);
    src.count = std::stoi(fields[1]);
    if (fields.size() == 3) src.hardness = std::stoi(fields[2]);
    if (src.count <= 0) throw std::invalid_argument("instance source: count must be positive");
    return src;
}

namespace {

struct StpVariant {
    StpCost cost;
    StpHeuristic heuristic;
};

StpVariant stp_variant(const DomainSpec& spec) {
    StpVariant v{spec.kind == DomainKind::StpHeavy ? StpCost::Heavy : StpCost::Unit,
                 StpHeuristic::Md};
    if (spec.heuristic == "md4" || spec.heuristic == "md-4") v.heuristic = StpHeuristic::Md4;
    else if (!spec.heuristic.empty() && spec.heuristic != "md")
        throw std::invalid_argument("stp: unknown heuristic '" + spec.heuristic + "'");
    return v;
}

int gap_excluded(const DomainSpec& spec) {
    const std::string& h = spec.heuristic;
    if (h.empty() || h == "gap") return 0;
    std::string digits;
    if (h.rfind("gap-", 0) == 0) digits = h.substr(4);
    else if (h.rfind("gap", 0) == 0) digits = h.substr(3);
    else throw std::invalid_argument("pancake: unknown heuristic '" + h + "'");
    return std::stoi(digits);
}

std::pair<int, int> pdb_split(const DomainSpec& spec, int n) {
    const std::string& h = spec.heuristic;
    std::string body = h;
    if (body.rfind("pdb:", 0) == 0) body = body.substr(4);
    else if (body.rfind("pdb", 0) == 0 && body.size() > 3) body = body.substr(3);
    else if (body.empty() || body == "pdb") return {(n + 1) / 2, n / 2};
    auto plus = body.find('+');
    if (plus == std::string::npos)
        throw std::invalid_argument("toh: heuristic must look like pdb:A+B");
    return {std::stoi(body.substr(0, plus)), std::stoi(body.substr(plus + 1))};
}

ProblemSetup make_stp_setup(const DomainSpec& spec, const StpState& start, const StpState& goal,
                            std::string id) {
    StpVariant v = stp_variant(spec);
    ProblemSetup p;
    p.domain = make_stp_domain(start.n, v.cost, v.heuristic, start, goal);
    p.instance = {stp_pack(start), stp_pack(goal), std::move(id)};
    return p;
}

ProblemSetup make_pancake_setup(const DomainSpec& spec, const PancakeState& start,
                                const PancakeState& goal, std::string id) {
    ProblemSetup p;
    p.domain = make_pancake_domain(start.n, gap_excluded(spec), start, goal);
    p.instance = {pancake_pack(start), pancake_pack(goal), std::move(id)};
    return p;
}

ProblemSetup make_toh_setup(const DomainSpec& spec, int n, const TohState& start,
                            const TohState& goal,
                            const std::vector<std::shared_ptr<const PdbTable>>& forward,
                            std::string id) {
    auto [a, b] = pdb_split(spec, n);
    auto groups = partition_groups(n, a, b);
    std::vector<std::shared_ptr<const PdbTable>> backward;
    for (const auto& g : groups) backward.push_back(get_pdb(n, g, start, spec.pdb_cache_dir));
    ProblemSetup p;
    p.domain = make_toh_domain(n, forward, backward, start, goal);
    p.instance = {toh_pack(start), toh_pack(goal), std::move(id)};
    return p;
}

StpState stp_scramble(const StpState& goal, int steps, Rng& rng) {
    StpState s = goal;
    std::vector<std::pair<StpState, Cost>> moves;
    for (int i = 0; i < steps; ++i) {
        moves.clear();
        stp_successors(s, StpCost::Unit, moves);
        s = moves[rng.next_below(moves.size())].first;
    }
    return s;
}

bool grid_connected(const GridMap& map, const GridState& a, const GridState& b) {
    std::vector<std::uint8_t> seen(map.cells.size(), 0);
    std::deque<GridState> queue{a};
    seen[a.y * map.width + a.x] = 1;
    std::vector<std::pair<GridState, Cost>> succ;
    while (!queue.empty()) {
        GridState cur = queue.front();
        queue.pop_front();
        if (cur == b) return true;
        succ.clear();
        grid_successors(cur, map, succ);
        for (const auto& [next, cost] : succ) {
            std::uint8_t& flag = seen[next.y * map.width + next.x];
            if (!flag) {
                flag = 1;
                queue.push_back(next);
            }
        }
    }
    return false;
}

GridMap synthetic_grid_map(int side, double density, Rng& rng) {
    GridMap map;
    map.width = side;
    map.height = side;
    map.cells.assign(static_cast<std::size_t>(side) * side, 1);
    auto threshold = static_cast<std::uint64_t>(density * 1000.0);
    for (auto& cell : map.cells)
        if (rng.next_below(1000) < threshold) cell = 0;
    return map;
}

GridState random_passable(const GridMap& map, Rng& rng) {
    for (int tries = 0; tries < 100000; ++tries) {
        GridState s{static_cast<int>(rng.next_below(map.width)),
                    static_cast<int>(rng.next_below(map.height))};
        if (map.passable(s.x, s.y)) return s;
    }
    throw std::runtime_error("grid: could not sample a passable cell");
}

std::vector<ProblemSetup> generate(const DomainSpec& spec, const InstanceSource& src) {
    int n = spec.n > 0 ? spec.n : spec.default_n();
    Rng rng(src.seed);
    std::vector<ProblemSetup> out;
    out.reserve(src.count);
    std::string tag = "gen" + std::to_string(src.seed) + "-";

    switch (spec.kind) {
        case DomainKind::Stp:
        case DomainKind::StpHeavy: {
            StpState goal = stp_goal(n);
            int steps = src.hardness >= 0 ? src.hardness : 100;
            for (int i = 0; i < src.count; ++i)
                out.push_back(make_stp_setup(spec, stp_scramble(goal, steps, rng), goal,
                                             tag + std::to_string(i)));
            break;
        }
        case DomainKind::Pancake: {
            PancakeState goal = pancake_goal(n);
            for (int i = 0; i < src.count; ++i) {
                std::vector<std::uint8_t> labels;
                for (int v = 1; v <= n; ++v) labels.push_back(static_cast<std::uint8_t>(v));
                rng.shuffle(labels);
                PancakeState start;
                start.n = n;
                std::copy(labels.begin(), labels.end(), start.stack.begin());
                out.push_back(make_pancake_setup(spec, start, goal, tag + std::to_string(i)));
            }
            break;
        }
        case DomainKind::Toh: {
            TohState goal = toh_all_on_peg(n, kTohPegs - 1);
            auto [a, b] = pdb_split(spec, n);
            std::vector<std::shared_ptr<const PdbTable>> forward;
            for (const auto& g : partition_groups(n, a, b))
                forward.push_back(get_pdb(n, g, goal, spec.pdb_cache_dir));
            for (int i = 0; i < src.count; ++i) {
                TohState start;
                start.n = n;
                for (int d = 0; d < n; ++d)
                    start.pegs[d] = static_cast<std::uint8_t>(rng.next_below(kTohPegs));
                out.push_back(make_toh_setup(spec, n, start, goal, forward, tag + std::to_string(i)));
            }
            break;
        }
        case DomainKind::Grid: {
            std::shared_ptr<const GridMap> map;
            if (!spec.map_file.empty())
                map = std::make_shared<GridMap>(load_grid_map(spec.map_file));
            else
                map = std::make_shared<GridMap>(synthetic_grid_map(n, spec.obstacle_density, rng));
            for (int i = 0; i < src.count; ++i) {
                GridState s, g;
                int tries = 0;
                do {
                    if (++tries > 10000)
                        throw std::runtime_error("grid: could not sample a connected pair");
                    s = random_passable(*map, rng);
                    g = random_passable(*map, rng);
                } while (s == g || !grid_connected(*map, s, g));
                ProblemSetup p;
                p.domain = make_grid_domain(map, s, g);
                p.instance = {grid_pack(s), grid_pack(g), tag + std::to_string(i)};
                out.push_back(std::move(p));
            }
            break;
        }
    }
    return out;
}

std::vector<std::int64_t> parse_int_line(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::int64_t> values;
    std::int64_t v;
    while (in >> v) values.push_back(v);
    return values;
}

std::vector<ProblemSetup> load_from_file(const DomainSpec& spec, const InstanceSource& src) {
    if (spec.kind == DomainKind::Grid) {
        std::vector<ScenarioEntry> entries = load_scenario(src.file);
        std::vector<ProblemSetup> out;
        std::unordered_map<std::string, std::shared_ptr<const GridMap>> maps;
        std::filesystem::path base = std::filesystem::path(src.file).parent_path();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const ScenarioEntry& e = entries[i];
            auto& map = maps[e.map_file];
            if (!map) {
                std::filesystem::path p = e.map_file;
                if (p.is_relative()) p = base / p;
                map = std::make_shared<GridMap>(load_grid_map(p.string()));
            }
            ProblemSetup setup;
            setup.domain = make_grid_domain(map, e.start, e.goal);
            setup.instance = {grid_pack(e.start), grid_pack(e.goal),
                              e.map_file + ":" + std::to_string(i)};
            out.push_back(std::move(setup));
        }
        return out;
    }

    std::ifstream in(src.file);
    if (!in) throw std::runtime_error(src.file + ": cannot open instance file");
    std::vector<ProblemSetup> out;
    std::string line;
    int line_no = 0;

    // ToH forward tables are shared across instances; built lazily once.
    std::vector<std::shared_ptr<const PdbTable>> toh_forward;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::int64_t> values = parse_int_line(line);
        if (values.empty()) continue;
        std::string id = src.file + ":" + std::to_string(line_no);
        auto bad = [&](const std::string& what) {
            throw std::runtime_error(src.file + ":" + std::to_string(line_no) + ": " + what);
        };
        switch (spec.kind) {
            case DomainKind::Stp:
            case DomainKind::StpHeavy: {
                int n = spec.n > 0 ? spec.n : spec.default_n();
                int cells = n * n;
                // Korf-style rows may carry a leading instance number.
                if (static_cast<int>(values.size()) == cells + 1)
                    values.erase(values.begin());
                if (static_cast<int>(values.size()) != cells) bad("expected " + std::to_string(cells) + " tiles");
                StpState start;
                start.n = n;
                for (int i = 0; i < cells; ++i) {
                    if (values[i] < 0 || values[i] >= cells) bad("tile out of range");
                    start.tiles[i] = static_cast<std::uint8_t>(values[i]);
                }
                if (!stp_valid(start)) bad("not a permutation");
                out.push_back(make_stp_setup(spec, start, stp_goal(n), std::move(id)));
                break;
            }
            case DomainKind::Pancake: {
                int n = static_cast<int>(values.size());
                PancakeState start;
                start.n = n;
                for (int i = 0; i < n; ++i) {
                    if (values[i] < 1 || values[i] > n) bad("pancake label out of range");
                    start.stack[i] = static_cast<std::uint8_t>(values[i]);
                }
                if (!pancake_valid(start)) bad("not a permutation of 1..n");
                out.push_back(make_pancake_setup(spec, start, pancake_goal(n), std::move(id)));
                break;
            }
            case DomainKind::Toh: {
                int n = static_cast<int>(values.size());
                TohState start;
                start.n = n;
                for (int i = 0; i < n; ++i) {
                    if (values[i] < 0 || values[i] >= kTohPegs) bad("peg index out of range");
                    start.pegs[i] = static_cast<std::uint8_t>(values[i]);
                }
                TohState goal = toh_all_on_peg(n, kTohPegs - 1);
                if (toh_forward.empty()) {
                    auto [a, b] = pdb_split(spec, n);
                    for (const auto& g : partition_groups(n, a, b))
                        toh_forward.push_back(get_pdb(n, g, goal, spec.pdb_cache_dir));
                }
                out.push_back(make_toh_setup(spec, n, start, goal, toh_forward, std::move(id)));
                break;
            }
            case DomainKind::Grid:
                break;   // handled above
        }
    }
    if (out.empty()) throw std::runtime_error(src.file + ": no instances found");
    return out;
}

} // namespace

std::vector<ProblemSetup> load_instances(const DomainSpec& spec, const InstanceSource& source) {
    return source.generated ? generate(spec, source) : load_from_file(spec, source);
}

} // namespace bss
