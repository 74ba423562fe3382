#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "bss/domain.hpp"

namespace bss {

// 8-connected grid map with scaled integer costs: straight moves cost 2,
// diagonal moves 3 (1.5 x 2). Diagonal moves require both adjacent
// orthogonal cells to be passable (no corner cutting).
struct GridMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> cells;   // 1 = passable

    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    bool passable(int x, int y) const { return in_bounds(x, y) && cells[y * width + x] != 0; }
};

inline constexpr Cost kGridStraight = 2;
inline constexpr Cost kGridDiagonal = 3;

struct GridState {
    int x = 0;
    int y = 0;
    friend bool operator==(const GridState&, const GridState&) = default;
};

PackedState grid_pack(const GridState& s);
GridState grid_unpack(const PackedState& p);

// Octile distance in scaled units: 3*min(dx,dy) + 2*|dx-dy|, clamped from
// below to the minimum edge cost (2) when the cells differ.
Cost octile_heuristic(const GridState& a, const GridState& b);

void grid_successors(const GridState& s, const GridMap& map,
                     std::vector<std::pair<GridState, Cost>>& out);

// Benchmark "octile" map format: `type octile`, `height H`, `width W`,
// `map`, then H rows where '.' and 'G' are passable and '@', 'O', 'T', 'W'
// are blocked. Any other cell character is an error.
GridMap parse_grid_map(std::istream& in, const std::string& name);
GridMap load_grid_map(const std::string& path);

// Scenario rows: bucket map w h sx sy gx gy optimal. A leading "version"
// line is skipped.
struct ScenarioEntry {
    std::string map_file;
    int width = 0, height = 0;
    GridState start, goal;
    double optimal = 0;
};
std::vector<ScenarioEntry> load_scenario(const std::string& path);

std::unique_ptr<Domain> make_grid_domain(std::shared_ptr<const GridMap> map,
                                         const GridState& start, const GridState& goal);

} // namespace bss
