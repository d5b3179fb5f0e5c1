#ifndef LATGRAPH_TESTS_COMMON_HPP
#define LATGRAPH_TESTS_COMMON_HPP

// Hand-built instances used across the unit tests. These are written directly
// from drawings (clockwise rotations as seen in the plane) and deliberately do
// not go through the family generators, so generator output can be checked
// against them.

#include <vector>

#include "latgraph/multigraph.hpp"

namespace testutil {

using latgraph::EdgeEnds;
using latgraph::MultiGraph;

// Cycle v0..v(n-1), edge i = {v_i, v_(i+1 mod n)}. Drawn with vertices placed
// counterclockwise, so the face containing the forward darts is the bounded
// one.
inline MultiGraph cycle(int n) {
  std::vector<EdgeEnds> edges;
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, i};
  return MultiGraph::build(n, edges, rot);
}

// Path v0 - v1 - ... - vn with n edges.
inline MultiGraph path(int n) {
  std::vector<EdgeEnds> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
  return MultiGraph::build(n + 1, edges);
}

// w x h grid of vertices, (x,y) -> y*w + x, y up. Horizontal edges first (row
// by row), then vertical. Clockwise rotation = [up, right, down, left].
struct Grid {
  MultiGraph g;
  int w, h;
  int horiz_base, vert_base;
  int vid(int x, int y) const { return y * w + x; }
  int hedge(int x, int y) const { return horiz_base + y * (w - 1) + x; }  // {(x,y),(x+1,y)}
  int vedge(int x, int y) const { return vert_base + y * w + x; }         // {(x,y),(x,y+1)}
};

inline Grid grid(int w, int h) {
  std::vector<EdgeEnds> edges;
  int horiz_base = 0;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x + 1 < w; ++x) edges.push_back({y * w + x, y * w + x + 1});
  int vert_base = static_cast<int>(edges.size());
  for (int y = 0; y + 1 < h; ++y)
    for (int x = 0; x < w; ++x) edges.push_back({y * w + x, (y + 1) * w + x});
  std::vector<std::vector<int>> rot(w * h);
  auto hedge = [&](int x, int y) { return horiz_base + y * (w - 1) + x; };
  auto vedge = [&](int x, int y) { return vert_base + y * w + x; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      auto& r = rot[y * w + x];
      if (y + 1 < h) r.push_back(vedge(x, y));      // up
      if (x + 1 < w) r.push_back(hedge(x, y));      // right
      if (y > 0) r.push_back(vedge(x, y - 1));      // down
      if (x > 0) r.push_back(hedge(x - 1, y));      // left
    }
  return Grid{MultiGraph::build(w * h, edges, rot), w, h, horiz_base, vert_base};
}

// Square v0 (bottom-left), v1 (bottom-right), v2 (top-right), v3 (top-left)
// with chord v0-v2. Edges: 0={0,1},1={1,2},2={2,3},3={3,0},4={0,2}.
inline MultiGraph square_with_chord() {
  std::vector<EdgeEnds> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  std::vector<std::vector<int>> rot = {
      {3, 4, 0},  // v0: left-edge (N), chord (NE), bottom (E)
      {0, 1},     // v1: bottom (W), right (N)
      {1, 4, 2},  // v2: right (S), chord (SW), top (W)
      {2, 3},     // v3: top (E), left (S)
  };
  return MultiGraph::build(4, edges, rot);
}

// 3x3 grid on the torus: genus-1 rotation system (Euler characteristic 0).
inline MultiGraph torus3() {
  const int w = 3, h = 3;
  std::vector<EdgeEnds> edges;
  auto vid = [&](int x, int y) { return ((y + h) % h) * w + ((x + w) % w); };
  // Edge 2*(y*w+x) = east from (x,y); 2*(y*w+x)+1 = north from (x,y).
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      edges.push_back({vid(x, y), vid(x + 1, y)});
      edges.push_back({vid(x, y), vid(x, y + 1)});
    }
  std::vector<std::vector<int>> rot(w * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      auto east = [&](int xx, int yy) { return 2 * (((yy + h) % h) * w + ((xx + w) % w)); };
      auto north = [&](int xx, int yy) { return 2 * (((yy + h) % h) * w + ((xx + w) % w)) + 1; };
      rot[vid(x, y)] = {north(x, y), east(x, y), north(x, y - 1), east(x - 1, y)};
    }
  return MultiGraph::build(w * h, edges, rot);
}

inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  int n = static_cast<int>(a.size());
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace testutil

#endif
