#ifndef LATGRAPH_FAMILIES_HPP
#define LATGRAPH_FAMILIES_HPP

#include <cstdlib>
#include <utility>
#include <vector>

#include "latgraph/multigraph.hpp"
#include "latgraph/orientation.hpp"

namespace latgraph {

// Ready-made instances: a graph together with the data the lattice
// machinery wants (a member orientation, the base vertex, edge biases).

// Cycle on n vertices, edge i joining i and i+1 mod n; the ensemble fixes
// the number k of edges directed the canonical way. Every edge takes the
// canonical direction in k/n of the members.
struct CycleFamily {
  MultiGraph g;
  Orientation ref;
  Bias bias;
  int v_star = 0;
  int n = 0, k = 0;
};

inline CycleFamily cycle_family(int n, int k) {
  require(n >= 2, ErrorKind::BadInput, "cycle needs at least two vertices");
  require(0 <= k && k <= n, ErrorKind::BadInput, "cycle circulation out of range");
  CycleFamily f;
  f.n = n;
  f.k = k;
  f.v_star = 0;
  std::vector<EdgeEnds> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  f.g = MultiGraph::build(n, std::move(edges));
  f.ref.assign(n, 0);
  for (int e = 0; e < k; ++e) f.ref[e] = 1;
  f.bias.resize(2 * n);
  for (int e = 0; e < n; ++e) {
    f.bias[dart_fwd(e)] = Rat(k, n);
    f.bias[dart_rev(e)] = Rat(n - k, n);
  }
  return f;
}

// Path with n edges, vertex i at position i; all orientations are members.
// The base vertex is the far end, away from vertex 0.
struct PathFamily {
  MultiGraph g;
  Orientation ref;
  Bias bias;
  int v_star = 0;
  int n = 0;
};

inline PathFamily path_family(int n) {
  require(n >= 1, ErrorKind::BadInput, "path needs at least one edge");
  PathFamily f;
  f.n = n;
  f.v_star = n;
  std::vector<EdgeEnds> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
  f.g = MultiGraph::build(n + 1, std::move(edges));
  f.ref.assign(n, 1);
  f.bias.assign(2 * n, Rat(1, 2));
  return f;
}

// Square grid with (n+1)^2 vertices and pinned boundary: the top row points
// right, the bottom row left, the left column down, the right column up.
// Members correspond to n x n alternating sign matrices. Rows are indexed
// top to bottom, so vertex (x, y) sits in column x of row y and the base
// vertex is the upper left corner.
struct GridPinnedFamily {
  MultiGraph g;
  Orientation ref;
  Bias bias;
  int v_star = 0;
  int n = 0;

  int vertex(int x, int y) const { return y * (n + 1) + x; }
  // Edge from (x, y) to (x+1, y); forward means rightward.
  int hedge(int x, int y) const { return y * n + x; }
  // Edge from (x, y) to (x, y+1); forward means downward.
  int vedge(int x, int y) const { return (n + 1) * n + y * (n + 1) + x; }
};

inline GridPinnedFamily grid_pinned_family(int n) {
  require(n >= 1, ErrorKind::BadInput, "pinned grid needs a positive side");
  GridPinnedFamily f;
  f.n = n;
  f.v_star = 0;
  const int nv = (n + 1) * (n + 1);
  std::vector<EdgeEnds> edges((n + 1) * n * 2);
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x < n; ++x)
      edges[f.hedge(x, y)] = {f.vertex(x, y), f.vertex(x + 1, y)};
  for (int y = 0; y < n; ++y)
    for (int x = 0; x <= n; ++x)
      edges[f.vedge(x, y)] = {f.vertex(x, y), f.vertex(x, y + 1)};

  std::vector<std::vector<int>> rotation(nv);
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= n; ++x) {
      auto& rot = rotation[f.vertex(x, y)];
      if (y > 0) rot.push_back(f.vedge(x, y - 1));  // up
      if (x < n) rot.push_back(f.hedge(x, y));      // right
      if (y < n) rot.push_back(f.vedge(x, y));      // down
      if (x > 0) rot.push_back(f.hedge(x - 1, y));  // left
    }

  std::vector<Pin> pins;
  for (int x = 0; x < n; ++x) {
    pins.push_back({f.hedge(x, 0), true});    // top row rightward
    pins.push_back({f.hedge(x, n), false});   // bottom row leftward
  }
  for (int y = 0; y < n; ++y) {
    pins.push_back({f.vedge(0, y), true});    // left column downward
    pins.push_back({f.vedge(n, y), false});   // right column upward
  }

  f.g = MultiGraph::build(nv, std::move(edges), std::move(rotation), std::move(pins));
  f.bias.assign(2 * f.g.ne(), Rat(1, 2));

  // Seed member: heights |x - y| / 2, the member whose matrix is the
  // identity.
  std::vector<Rat> h(nv);
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= n; ++x) h[f.vertex(x, y)] = Rat(std::abs(x - y), 2);
  f.ref = orientation_of_height(f.g, f.bias, h);
  return f;
}

// Entries in {-1, 0, 1}, nonzero entries alternating in sign along every
// row and column, first and last nonzero entry +1. Equivalently all row and
// column prefix sums lie in {0, 1} and full sums equal 1.
inline bool is_alternating_sign_matrix(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return false;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) return false;
  for (int r = 0; r < n; ++r) {
    int sum = 0;
    for (int c = 0; c < n; ++c) {
      if (m[r][c] < -1 || m[r][c] > 1) return false;
      sum += m[r][c];
      if (sum < 0 || sum > 1) return false;
    }
    if (sum != 1) return false;
  }
  for (int c = 0; c < n; ++c) {
    int sum = 0;
    for (int r = 0; r < n; ++r) {
      sum += m[r][c];
      if (sum < 0 || sum > 1) return false;
    }
    if (sum != 1) return false;
  }
  return true;
}

inline bool is_permutation_matrix(const std::vector<std::vector<int>>& m) {
  if (!is_alternating_sign_matrix(m)) return false;
  for (const auto& row : m)
    for (int v : row)
      if (v < 0) return false;
  return true;
}

// Matrix entry (r, c) is the alternating combination of the heights at the
// four corners of grid square (r, c): -h(UL) + h(UR) + h(LL) - h(LR).
inline std::vector<std::vector<int>> matrix_of_orientation(const GridPinnedFamily& fam,
                                                           const Orientation& o) {
  auto h = height_function(fam.g, fam.bias, o, fam.v_star);
  const int n = fam.n;
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Rat v = -h[fam.vertex(c, r)] + h[fam.vertex(c + 1, r)] +
              h[fam.vertex(c, r + 1)] - h[fam.vertex(c + 1, r + 1)];
      m[r][c] = static_cast<int>(to_integer(v));
    }
  return m;
}

// Complete graph on n vertices placed counterclockwise at the corners of a
// regular n-gon, every edge a straight chord. Edges are listed in
// lexicographic pair order; the rotation at k walks the other vertices
// clockwise, starting at the counterclockwise polygon neighbour:
// k-1, k-2, ..., k+1. For n >= 4 the chords cross, so the rotation system
// is a drawing, not a sphere embedding. The perimeter edges {i, i+1} form
// the encircling cycle.
inline MultiGraph kn_outer(int n) {
  require(n >= 3, ErrorKind::BadInput, "outer complete graph needs at least three vertices");
  std::vector<EdgeEnds> edges;
  std::vector<std::vector<int>> eid(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      eid[i][j] = eid[j][i] = static_cast<int>(edges.size());
      edges.push_back({i, j});
    }
  std::vector<std::vector<int>> rot(n);
  for (int k = 0; k < n; ++k)
    for (int s = 1; s < n; ++s) rot[k].push_back(eid[k][(k - s + n) % n]);
  return MultiGraph::build(n, std::move(edges), std::move(rot));
}

// Quadrilateral 0 (bottom left), 1 (bottom right), 2 (top right), 3 (top
// left) with the diagonal 0-2. Edges 0..3 run around the square, edge 4 is
// the chord.
inline MultiGraph square_with_chord() {
  std::vector<EdgeEnds> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  std::vector<std::vector<int>> rot = {
      {3, 4, 0},  // v0: left, chord, bottom
      {0, 1},     // v1: bottom, right
      {1, 4, 2},  // v2: right, chord, top
      {2, 3},     // v3: top, left
  };
  return MultiGraph::build(4, std::move(edges), std::move(rot));
}

// Inverse map: corner heights h(r, c) = (r + c)/2 - sum of matrix entries
// strictly above and left of corner (r, c).
inline Orientation orientation_of_matrix(const GridPinnedFamily& fam,
                                         const std::vector<std::vector<int>>& m) {
  require(is_alternating_sign_matrix(m) && static_cast<int>(m.size()) == fam.n,
          ErrorKind::BadInput, "not an alternating sign matrix of the right size");
  const int n = fam.n;
  std::vector<Rat> h((n + 1) * (n + 1));
  std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(n + 1, 0));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      s[r][c] = s[r - 1][c] + s[r][c - 1] - s[r - 1][c - 1] + m[r - 1][c - 1];
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c)
      h[fam.vertex(c, r)] = Rat(r + c, 2) - Rat(s[r][c]);
  return orientation_of_height(fam.g, fam.bias, h);
}

}  // namespace latgraph

#endif  // LATGRAPH_FAMILIES_HPP
