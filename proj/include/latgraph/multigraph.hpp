#ifndef LATGRAPH_MULTIGRAPH_HPP
#define LATGRAPH_MULTIGRAPH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "latgraph/error.hpp"

namespace latgraph {

// Vertices and edges are dense indices. Parallel edges are allowed, self-loops
// are not. A dart is a directed edge: dart 2*e runs tail->head as stored,
// dart 2*e+1 is the reversal.
struct EdgeEnds {
  int u, v;
};

struct Pin {
  int edge;
  bool forward;  // true: pinned tail->head as stored
};

inline int dart_fwd(int e) { return 2 * e; }
inline int dart_rev(int e) { return 2 * e + 1; }
inline int dart_edge(int d) { return d / 2; }
inline bool dart_reversed(int d) { return d & 1; }
inline int dart_opposite(int d) { return d ^ 1; }

class MultiGraph {
 public:
  // Validates and derives rotation defaults. `rotation[v]` lists incident edge
  // ids in clockwise order; when absent, increasing-id order is used.
  static MultiGraph build(int num_vertices, std::vector<EdgeEnds> edges,
                          std::vector<std::vector<int>> rotation = {},
                          std::vector<Pin> pins = {}) {
    MultiGraph g;
    require(num_vertices >= 1, ErrorKind::BadInput, "graph needs at least one vertex");
    g.nv_ = num_vertices;
    g.edges_ = std::move(edges);
    for (int e = 0; e < g.ne(); ++e) {
      const auto& [u, v] = g.edges_[e];
      require(0 <= u && u < g.nv_ && 0 <= v && v < g.nv_, ErrorKind::BadInput,
              "edge " + std::to_string(e) + " has endpoint out of range");
      require(u != v, ErrorKind::SelfLoop, "edge " + std::to_string(e) + " is a self-loop");
    }

    std::vector<std::vector<int>> incident(g.nv_);
    for (int e = 0; e < g.ne(); ++e) {
      incident[g.edges_[e].u].push_back(e);
      incident[g.edges_[e].v].push_back(e);
    }

    if (rotation.empty()) {
      g.rot_ = incident;  // already in increasing edge id order
    } else {
      require(static_cast<int>(rotation.size()) == g.nv_, ErrorKind::BadRotation,
              "rotation must list every vertex");
      for (int v = 0; v < g.nv_; ++v) {
        auto sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        require(sorted == incident[v], ErrorKind::BadRotation,
                "rotation at vertex " + std::to_string(v) +
                    " is not a permutation of its incident edges");
      }
      g.rot_ = std::move(rotation);
    }

    g.pin_.assign(g.ne(), -1);
    for (const Pin& p : pins) {
      require(0 <= p.edge && p.edge < g.ne(), ErrorKind::BadInput,
              "pin references missing edge " + std::to_string(p.edge));
      require(g.pin_[p.edge] == -1, ErrorKind::BadInput,
              "edge " + std::to_string(p.edge) + " pinned twice");
      g.pin_[p.edge] = p.forward ? 1 : 0;
    }

    // Connectivity.
    std::vector<char> seen(g.nv_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.rot_[v]) {
        int w = g.other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    require(std::all_of(seen.begin(), seen.end(), [](char c) { return c; }),
            ErrorKind::Disconnected, "graph is not connected");
    return g;
  }

  int nv() const { return nv_; }
  int ne() const { return static_cast<int>(edges_.size()); }
  const EdgeEnds& ends(int e) const { return edges_[e]; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  int other_end(int e, int v) const {
    const auto& [a, b] = edges_[e];
    return a == v ? b : a;
  }

  int tail(int d) const {
    const auto& [u, v] = edges_[dart_edge(d)];
    return dart_reversed(d) ? v : u;
  }
  int head(int d) const { return tail(dart_opposite(d)); }

  // Dart of edge e leaving vertex v.
  int dart_from(int e, int v) const {
    return edges_[e].u == v ? dart_fwd(e) : dart_rev(e);
  }

  std::optional<bool> pin(int e) const {
    if (pin_[e] < 0) return std::nullopt;
    return pin_[e] == 1;
  }
  bool has_pins() const {
    return std::any_of(pin_.begin(), pin_.end(), [](signed char p) { return p >= 0; });
  }
  // Vertices incident to a pinned edge (the prescribed boundary).
  std::vector<char> pinned_vertices() const {
    std::vector<char> b(nv_, 0);
    for (int e = 0; e < ne(); ++e)
      if (pin_[e] >= 0) b[edges_[e].u] = b[edges_[e].v] = 1;
    return b;
  }

  // Position of edge e in rotation(v); edges appear exactly once per endpoint.
  int rotation_index(int v, int e) const {
    const auto& r = rot_[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      if (r[i] == e) return i;
    fail(ErrorKind::Internal, "edge not incident to vertex");
  }
  int clockwise_next(int v, int e) const {
    int i = rotation_index(v, e);
    return rot_[v][(i + 1) % rot_[v].size()];
  }
  int clockwise_prev(int v, int e) const {
    int i = rotation_index(v, e);
    return rot_[v][(i + rot_[v].size() - 1) % rot_[v].size()];
  }

 private:
  int nv_ = 0;
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<int>> rot_;
  std::vector<signed char> pin_;
};

// Deterministic spanning tree: DFS from the root, incident edges scanned in
// increasing edge id.
struct SpanningTree {
  std::vector<char> in_tree;    // per edge
  std::vector<int> parent_edge; // per vertex, -1 at root
  std::vector<int> parent;      // per vertex, -1 at root
  std::vector<int> depth;
  int root = 0;
};

inline SpanningTree spanning_tree(const MultiGraph& g, int root = 0) {
  SpanningTree t;
  t.root = root;
  t.in_tree.assign(g.ne(), 0);
  t.parent_edge.assign(g.nv(), -1);
  t.parent.assign(g.nv(), -1);
  t.depth.assign(g.nv(), 0);
  std::vector<std::vector<int>> inc(g.nv());
  for (int e = 0; e < g.ne(); ++e) {  // increasing id per vertex
    inc[g.ends(e).u].push_back(e);
    inc[g.ends(e).v].push_back(e);
  }
  std::vector<char> seen(g.nv(), 0);
  seen[root] = 1;
  std::vector<std::pair<int, size_t>> stack = {{root, 0}};  // (vertex, next incident slot)
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i == inc[v].size()) {
      stack.pop_back();
      continue;
    }
    int e = inc[v][i++];
    int w = g.other_end(e, v);
    if (!seen[w]) {
      seen[w] = 1;
      t.in_tree[e] = 1;
      t.parent_edge[w] = e;
      t.parent[w] = v;
      t.depth[w] = t.depth[v] + 1;
      stack.push_back({w, 0});
    }
  }
  return t;
}

// Darts of the unique tree path from -> to.
inline std::vector<int> tree_path_darts(const MultiGraph& g, const SpanningTree& t, int from,
                                        int to) {
  std::vector<int> up, down;
  int a = from, b = to;
  while (t.depth[a] > t.depth[b]) {
    up.push_back(g.dart_from(t.parent_edge[a], a));
    a = t.parent[a];
  }
  while (t.depth[b] > t.depth[a]) {
    down.push_back(g.dart_from(t.parent_edge[b], b));
    b = t.parent[b];
  }
  while (a != b) {
    up.push_back(g.dart_from(t.parent_edge[a], a));
    a = t.parent[a];
    down.push_back(g.dart_from(t.parent_edge[b], b));
    b = t.parent[b];
  }
  for (auto it = down.rbegin(); it != down.rend(); ++it) up.push_back(dart_opposite(*it));
  return up;
}

// Fundamental cycles of the deterministic spanning tree, one per non-tree edge
// in increasing id order. Each cycle is a closed dart sequence: the non-tree
// edge forward, then the tree path back.
inline std::vector<std::vector<int>> cycle_basis(const MultiGraph& g) {
  SpanningTree t = spanning_tree(g);
  std::vector<std::vector<int>> basis;
  for (int e = 0; e < g.ne(); ++e) {
    if (t.in_tree[e]) continue;
    std::vector<int> cyc = {dart_fwd(e)};
    for (int d : tree_path_darts(g, t, g.ends(e).v, g.ends(e).u)) cyc.push_back(d);
    basis.push_back(std::move(cyc));
  }
  return basis;
}

// Two-coloring by BFS from vertex 0 (color 0 = black). Throws NotBipartite
// with an odd-cycle witness.
inline std::vector<char> bipartite_coloring(const MultiGraph& g) {
  std::vector<char> color(g.nv(), -1);
  std::vector<int> queue = {0};
  color[0] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : g.rotation(v)) {
      int w = g.other_end(e, v);
      if (color[w] == -1) {
        color[w] = static_cast<char>(1 - color[v]);
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        SpanningTree t = spanning_tree(g);
        std::string witness = "odd cycle through edge " + std::to_string(e) + " and vertices";
        int a = v, b = w;
        while (a != b) {  // same BFS parity conflict implies odd tree-path + e
          if (t.depth[a] < t.depth[b]) std::swap(a, b);
          witness += " " + std::to_string(a);
          a = t.parent[a];
        }
        witness += " " + std::to_string(a);
        fail(ErrorKind::NotBipartite, witness);
      }
    }
  }
  return color;
}

}  // namespace latgraph

#endif  // LATGRAPH_MULTIGRAPH_HPP
