#include "bss/domains/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bss {

PackedState grid_pack(const GridState& s) {
    PackedState p;
    p.lo = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.y)) << 32) |
           static_cast<std::uint32_t>(s.x);
    return p;
}

GridState grid_unpack(const PackedState& p) {
    return GridState{static_cast<int>(p.lo & 0xFFFFFFFFu), static_cast<int>(p.lo >> 32)};
}

Cost octile_heuristic(const GridState& a, const GridState& b) {
    if (a == b) return 0;
    Cost dx = std::abs(a.x - b.x);
    Cost dy = std::abs(a.y - b.y);
    Cost est = 3 * std::min(dx, dy) + 2 * std::abs(dx - dy);
    return std::max(est, kGridStraight);
}

void grid_successors(const GridState& s, const GridMap& map,
                     std::vector<std::pair<GridState, Cost>>& out) {
    static constexpr int dx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    for (int i = 0; i < 8; ++i) {
        int nx = s.x + dx[i];
        int ny = s.y + dy[i];
        if (!map.passable(nx, ny)) continue;
        if (i >= 4 && (!map.passable(s.x + dx[i], s.y) || !map.passable(s.x, s.y + dy[i])))
            continue;
        out.emplace_back(GridState{nx, ny}, i < 4 ? kGridStraight : kGridDiagonal);
    }
}

GridMap parse_grid_map(std::istream& in, const std::string& name) {
    auto fail = [&](const std::string& what) -> GridMap {
        throw std::runtime_error(name + ": " + what);
    };
    std::string word, type;
    GridMap map;
    if (!(in >> word >> type) || word != "type" || type != "octile")
        return fail("expected 'type octile' header");
    for (int i = 0; i < 2; ++i) {
        int value;
        if (!(in >> word >> value) || value <= 0) return fail("bad height/width header");
        if (word == "height")
            map.height = value;
        else if (word == "width")
            map.width = value;
        else
            return fail("unexpected header field '" + word + "'");
    }
    if (map.width <= 0 || map.height <= 0) return fail("missing height or width");
    if (!(in >> word) || word != "map") return fail("expected 'map' line");
    map.cells.assign(static_cast<std::size_t>(map.width) * map.height, 0);
    std::string row;
    std::getline(in, row);   // consume the rest of the 'map' line
    for (int y = 0; y < map.height; ++y) {
        if (!std::getline(in, row)) return fail("truncated map body");
        if (static_cast<int>(row.size()) < map.width)
            return fail("map row " + std::to_string(y) + " too short");
        for (int x = 0; x < map.width; ++x) {
            switch (row[x]) {
                case '.':
                case 'G':
                    map.cells[static_cast<std::size_t>(y) * map.width + x] = 1;
                    break;
                case '@':
                case 'O':
                case 'T':
                case 'W':
                    break;
                default:
                    return fail(std::string("unknown map character '") + row[x] + "'");
            }
        }
    }
    return map;
}

GridMap load_grid_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open map file");
    return parse_grid_map(in, path);
}

std::vector<ScenarioEntry> load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open scenario file");
    std::vector<ScenarioEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line.rfind("version", 0) == 0) continue;
        std::istringstream row(line);
        int bucket;
        ScenarioEntry e;
        if (!(row >> bucket >> e.map_file >> e.width >> e.height >> e.start.x >> e.start.y >>
              e.goal.x >> e.goal.y >> e.optimal))
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed scenario row");
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace {

class GridDomain final : public Domain {
public:
    GridDomain(std::shared_ptr<const GridMap> map, const GridState& start, const GridState& goal)
        : map_(std::move(map)), start_(start), goal_(goal) {
        if (!map_ || !map_->passable(start.x, start.y) || !map_->passable(goal.x, goal.y))
            throw std::invalid_argument("grid: start or goal not on a passable cell");
    }

    void successors(const PackedState& p, std::vector<Successor>& out) const override {
        const GridState s = grid_unpack(p);
        static constexpr int dx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
        static constexpr int dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
        for (int i = 0; i < 8; ++i) {
            int nx = s.x + dx[i];
            int ny = s.y + dy[i];
            if (!map_->passable(nx, ny)) continue;
            if (i >= 4 && (!map_->passable(nx, s.y) || !map_->passable(s.x, ny))) continue;
            out.push_back({grid_pack(GridState{nx, ny}), i < 4 ? kGridStraight : kGridDiagonal});
        }
    }

    Cost h_forward(const PackedState& p) const override {
        return octile_heuristic(grid_unpack(p), goal_);
    }

    Cost h_backward(const PackedState& p) const override {
        return octile_heuristic(grid_unpack(p), start_);
    }

    Cost edge_cost_gcd() const override { return 1; }
    Cost min_edge_cost() const override { return kGridStraight; }

    std::string name() const override { return "grid"; }

    std::string describe(const PackedState& p) const override {
        GridState s = grid_unpack(p);
        return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
    }

private:
    std::shared_ptr<const GridMap> map_;
    GridState start_, goal_;
};

} // namespace

std::unique_ptr<Domain> make_grid_domain(std::shared_ptr<const GridMap> map,
                                         const GridState& start, const GridState& goal) {
    return std::make_unique<GridDomain>(std::move(map), start, goal);
}

} // namespace bss
