#pragma once

#include <array>
#include <optional>
#include <vector>

#include "infotile/json_io.hpp"

namespace infotile {

// Tile edges in N, E, S, W order; colors are 1..num_colors.
using Tile = std::array<int, 4>;
enum Side { N = 0, E = 1, S = 2, W = 3 };

struct TileSet {
  int num_colors = 0;
  std::vector<Tile> tiles;
};

struct PeriodicTiling {
  int a = 0, b = 0;                   // periods along u (east) and v (north)
  std::vector<std::vector<int>> grid;  // grid[v][u], tile indices
  int at(long u, long v) const;        // wraps
};

void validate_tileset(const TileSet& ts);  // throws
bool validate_tiling(const TileSet& ts, const PeriodicTiling& til);  // throws on bad indices/shape

struct SearchOptions {
  int jobs = 1;
};
std::optional<PeriodicTiling> find_periodic_tiling(const TileSet& ts, int max_period, const SearchOptions& opt = {});
// Smallest (a,b) only: does a tiling with exactly these periods exist?
std::optional<PeriodicTiling> tile_torus(const TileSet& ts, int a, int b);

std::string render_tiling(const TileSet& ts, const PeriodicTiling& til);

json tileset_json(const TileSet& ts);
TileSet tileset_from_json(const json& j);
json tiling_json(const PeriodicTiling& t);
PeriodicTiling tiling_from_json(const json& j);

}  // namespace infotile
