#ifndef LATGRAPH_REGION_HPP
#define LATGRAPH_REGION_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "latgraph/multigraph.hpp"

namespace latgraph {

// A region is a finite set of cells in one of two grids, drawn with y
// growing upward.
//
// Squares: cell (x, y) is the unit square [x,x+1] x [y,y+1]; it is black
// when x + y is even. Tilings by dominoes are perfect matchings of the
// side-adjacency graph.
//
// Triangles: cell (x, y) sits in row y of a triangular strip; even x is an
// upward triangle (black), odd x a downward one. x counts half-steps from
// the row's left edge, so the upward triangle (x, y) touches downward
// triangles (x-1, y), (x+1, y), and (x+1, y-1). Tilings by lozenges are
// perfect matchings of the side-adjacency graph.
enum class RegionKind { Squares, Triangles };

struct Region {
  RegionKind kind = RegionKind::Squares;
  std::vector<std::pair<int, int>> cells;  // (x, y), sorted by (y, x)

  void normalize() {
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) {
                return std::pair(a.second, a.first) < std::pair(b.second, b.first);
              });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  }
};

// w columns, h rows of squares with lower-left corner at the origin.
inline Region rectangle_region(int w, int h) {
  require(w >= 1 && h >= 1, ErrorKind::BadInput, "rectangle needs positive sides");
  Region r;
  r.kind = RegionKind::Squares;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) r.cells.emplace_back(x, y);
  r.normalize();
  return r;
}

// Aztec diamond of order n: rows y = -n .. n-1, row y holding the 2w squares
// x = -w .. w-1 with w = n - (y >= 0 ? y : -1 - y).
inline Region aztec_region(int n) {
  require(n >= 1, ErrorKind::BadInput, "aztec diamond needs order >= 1");
  Region r;
  r.kind = RegionKind::Squares;
  for (int y = -n; y < n; ++y) {
    int w = n - (y >= 0 ? y : -1 - y);
    for (int x = -w; x < w; ++x) r.cells.emplace_back(x, y);
  }
  r.normalize();
  return r;
}

// Hexagon with side lengths a, b, c, a, b, c: the upward triangle of side
// a+b+c with corner triangles of sides a (lower left), c (lower right) and
// b (top) removed. Row y of the full triangle holds cells x = 0 .. 2(s-y)-2.
inline Region hexagon_region(int a, int b, int c) {
  require(a >= 1 && b >= 1 && c >= 1, ErrorKind::BadInput, "hexagon needs positive sides");
  int s = a + b + c;
  Region r;
  r.kind = RegionKind::Triangles;
  for (int y = 0; y < s; ++y)
    for (int x = 0; x <= 2 * (s - y) - 2; ++x) {
      if (y < a && x <= 2 * (a - y) - 2) continue;  // lower left corner
      if (y < c && x >= 2 * (s - c)) continue;      // lower right corner
      if (y >= s - b) continue;                     // top corner
      r.cells.emplace_back(x, y);
    }
  r.normalize();
  return r;
}

// The side-adjacency graph of a region: one vertex per cell, edges between
// cells sharing a side, clockwise rotations from the drawing. Edge ids are
// lexicographic in the (smaller, larger) vertex index pair.
struct RegionGraph {
  MultiGraph g;
  Region region;
  std::vector<char> black;  // per vertex

  int cell_index(int x, int y) const {
    auto key = std::pair(y, x);
    auto it = std::lower_bound(region.cells.begin(), region.cells.end(), key,
                               [](const auto& c, const auto& k) {
                                 return std::pair(c.second, c.first) < k;
                               });
    if (it == region.cells.end() || std::pair(it->second, it->first) != key) return -1;
    return static_cast<int>(it - region.cells.begin());
  }
};

// Clockwise neighbor offsets of a cell.
inline std::vector<std::pair<int, int>> cell_neighbors(RegionKind kind, int x, int y) {
  if (kind == RegionKind::Squares)
    return {{x, y + 1}, {x + 1, y}, {x, y - 1}, {x - 1, y}};
  if (x % 2 == 0)  // upward triangle
    return {{x + 1, y}, {x + 1, y - 1}, {x - 1, y}};
  return {{x - 1, y + 1}, {x + 1, y}, {x - 1, y}};
}

inline bool cell_is_black(RegionKind kind, int x, int y) {
  if (kind == RegionKind::Squares) return (x + y) % 2 == 0;
  return x % 2 == 0;
}

inline RegionGraph region_graph(Region region) {
  region.normalize();
  RegionGraph rg;
  rg.region = std::move(region);
  const auto& cells = rg.region.cells;
  const int n = static_cast<int>(cells.size());
  require(n >= 2, ErrorKind::BadInput, "region needs at least two cells");

  std::map<std::pair<int, int>, int> edge_id;
  std::vector<EdgeEnds> edges;
  for (int i = 0; i < n; ++i) {
    auto [x, y] = cells[i];
    for (auto [nx, ny] : cell_neighbors(rg.region.kind, x, y)) {
      int j = rg.cell_index(nx, ny);
      if (j <= i) continue;  // record each adjacency once, from the lower index
      edge_id[{i, j}] = 0;
    }
  }
  for (auto& [pair, id] : edge_id) {  // map order = lexicographic
    id = static_cast<int>(edges.size());
    edges.push_back({pair.first, pair.second});
  }

  std::vector<std::vector<int>> rotation(n);
  rg.black.resize(n);
  for (int i = 0; i < n; ++i) {
    auto [x, y] = cells[i];
    rg.black[i] = cell_is_black(rg.region.kind, x, y);
    for (auto [nx, ny] : cell_neighbors(rg.region.kind, x, y)) {
      int j = rg.cell_index(nx, ny);
      if (j < 0) continue;
      rotation[i].push_back(edge_id.at({std::min(i, j), std::max(i, j)}));
    }
  }
  rg.g = MultiGraph::build(n, std::move(edges), std::move(rotation));
  return rg;
}

}  // namespace latgraph

#endif  // LATGRAPH_REGION_HPP
