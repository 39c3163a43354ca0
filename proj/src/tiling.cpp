#include "infotile/tiling.hpp"

#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace infotile {

int PeriodicTiling::at(long u, long v) const {
  long uu = ((u % a) + a) % a, vv = ((v % b) + b) % b;
  return grid[vv][uu];
}

void validate_tileset(const TileSet& ts) {
  if (ts.num_colors < 1) throw std::invalid_argument("tile set needs at least one color");
  if (ts.tiles.empty()) throw std::invalid_argument("tile set is empty");
  std::set<Tile> seen;
  for (auto& t : ts.tiles) {
    for (int c : t)
      if (c < 1 || c > ts.num_colors)
        throw std::invalid_argument("tile color " + std::to_string(c) + " outside 1.." + std::to_string(ts.num_colors));
    if (!seen.insert(t).second) throw std::invalid_argument("duplicate tile in tile set");
  }
}

bool validate_tiling(const TileSet& ts, const PeriodicTiling& til) {
  if (til.a < 1 || til.b < 1) throw std::invalid_argument("tiling periods must be positive");
  if (static_cast<int>(til.grid.size()) != til.b) throw std::invalid_argument("tiling grid must have b rows");
  for (auto& row : til.grid) {
    if (static_cast<int>(row.size()) != til.a) throw std::invalid_argument("tiling rows must have a entries");
    for (int t : row)
      if (t < 0 || t >= static_cast<int>(ts.tiles.size()))
        throw std::out_of_range("tile index " + std::to_string(t) + " out of range");
  }
  for (int v = 0; v < til.b; ++v)
    for (int u = 0; u < til.a; ++u) {
      const Tile& here = ts.tiles[til.at(u, v)];
      if (here[E] != ts.tiles[til.at(u + 1, v)][W]) return false;
      if (here[N] != ts.tiles[til.at(u, v + 1)][S]) return false;
    }
  return true;
}

namespace {

// Row-major DFS; cell (u,v) checks its west and south neighbours, plus the
// wrap-around partners when it closes a row or column.
struct TorusDfs {
  const TileSet& ts;
  int a, b;
  std::vector<int> cell;
  const std::atomic<bool>* cancel = nullptr;

  bool fits(int idx, int t) const {
    int u = idx % a, v = idx / a;
    const Tile& x = ts.tiles[t];
    if (u > 0 && ts.tiles[cell[idx - 1]][E] != x[W]) return false;
    if (v > 0 && ts.tiles[cell[idx - a]][N] != x[S]) return false;
    if (u == a - 1 && ts.tiles[cell[idx - u]][W] != x[E]) return false;
    if (v == b - 1 && ts.tiles[cell[u]][S] != x[N]) return false;
    return true;
  }

  bool run(int idx) {
    if (cancel && cancel->load(std::memory_order_relaxed)) return false;
    if (idx == a * b) return true;
    for (int t = 0; t < static_cast<int>(ts.tiles.size()); ++t) {
      cell[idx] = t;  // set first so self-references (1-wide tori) read it
      if (!fits(idx, t)) continue;
      if (run(idx + 1)) return true;
    }
    return false;
  }
};

PeriodicTiling to_tiling(int a, int b, const std::vector<int>& cell) {
  PeriodicTiling t;
  t.a = a;
  t.b = b;
  t.grid.assign(b, std::vector<int>(a));
  for (int v = 0; v < b; ++v)
    for (int u = 0; u < a; ++u) t.grid[v][u] = cell[v * a + u];
  return t;
}

}  // namespace

std::optional<PeriodicTiling> tile_torus(const TileSet& ts, int a, int b) {
  TorusDfs d{ts, a, b, std::vector<int>(a * b, 0)};
  if (!d.run(0)) return std::nullopt;
  return to_tiling(a, b, d.cell);
}

std::optional<PeriodicTiling> find_periodic_tiling(const TileSet& ts, int max_period, const SearchOptions& opt) {
  validate_tileset(ts);
  if (max_period < 1) throw std::invalid_argument("max period must be >= 1");
  std::vector<std::pair<int, int>> order;
  for (int a = 1; a <= max_period; ++a)
    for (int b = 1; b <= max_period; ++b) order.emplace_back(a, b);
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (auto [a, b] : order)
      if (auto t = tile_torus(ts, a, b)) return t;
    return std::nullopt;
  }
  // Join-and-select: workers claim pairs in order; the smallest success wins
  // and pairs after it are cancelled.
  std::vector<std::optional<PeriodicTiling>> found(order.size());
  std::atomic<size_t> next{0}, best{order.size()};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= order.size() || i > best.load()) return;
      std::atomic<bool> cancel{false};
      TorusDfs d{ts, order[i].first, order[i].second, std::vector<int>(order[i].first * order[i].second, 0), &cancel};
      if (d.run(0)) {
        found[i] = to_tiling(d.a, d.b, d.cell);
        size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  size_t b = best.load();
  if (b == order.size()) return std::nullopt;
  return found[b];
}

std::string render_tiling(const TileSet& ts, const PeriodicTiling& til) {
  std::ostringstream os;
  for (int v = til.b - 1; v >= 0; --v) {
    for (int u = 0; u < til.a; ++u) {
      const Tile& t = ts.tiles[til.grid[v][u]];
      os << (u ? " " : "") << "[" << t[N] << t[E] << t[S] << t[W] << "]";
    }
    os << "\n";
  }
  return os.str();
}

json tileset_json(const TileSet& ts) {
  json tiles = json::array();
  for (auto& t : ts.tiles) tiles.push_back({t[0], t[1], t[2], t[3]});
  return {{"colors", ts.num_colors}, {"tiles", tiles}};
}

TileSet tileset_from_json(const json& j) {
  TileSet ts;
  try {
    ts.num_colors = j.at("colors").get<int>();
    for (auto& t : j.at("tiles")) {
      if (!t.is_array() || t.size() != 4) throw std::invalid_argument("each tile needs 4 colors [n,e,s,w]");
      ts.tiles.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed tile set: ") + e.what());
  }
  validate_tileset(ts);
  return ts;
}

json tiling_json(const PeriodicTiling& t) { return {{"a", t.a}, {"b", t.b}, {"grid", t.grid}}; }

PeriodicTiling tiling_from_json(const json& j) {
  PeriodicTiling t;
  try {
    t.a = j.at("a").get<int>();
    t.b = j.at("b").get<int>();
    t.grid = j.at("grid").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed tiling: ") + e.what());
  }
  return t;
}

}  // namespace infotile
