#ifndef LATGRAPH_TREE_HPP
#define LATGRAPH_TREE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latgraph/matching.hpp"
#include "latgraph/multigraph.hpp"
#include "latgraph/planar.hpp"
#include "latgraph/poset.hpp"

namespace latgraph {

// Spanning trees of a graph drawn on the sphere, ordered by swing moves.
// This mirrors the factor story one level down: a tree T with base vertex v*
// and base face f* carries a pair of arborescences (the tree edges pointed
// at v*, the duals of the non-tree edges pointed at f*), a swing exchanges
// an edge for its clockwise successor at a vertex, and the incidence graph
// H(v*, f*) turns all of it into perfect matchings.

struct TreeContext {
  MultiGraph g;
  Faces faces;
  int v_star = 0;
  int f_star = 0;
};

inline TreeContext make_tree_context(MultiGraph g, int v_star, int f_star) {
  TreeContext tc;
  tc.faces = trace_faces(g);
  require(0 <= v_star && v_star < g.nv(), ErrorKind::BadInput, "base vertex out of range");
  require(0 <= f_star && f_star < num_faces(tc.faces), ErrorKind::BadInput,
          "base face out of range");
  bool incident = false;
  for (int d : tc.faces.boundary[f_star])
    if (g.tail(d) == v_star) incident = true;
  require(incident, ErrorKind::NotIncident, "base vertex does not lie on the base face");
  tc.g = std::move(g);
  tc.v_star = v_star;
  tc.f_star = f_star;
  return tc;
}

// The angle crossed after e on a small clockwise circle around v: e2 is the
// clockwise successor of e at v and f the face passed between them. Degree
// one vertices have no angle. Angles are identified by (v, e).
struct Angle {
  int v = -1, e = -1, e2 = -1, f = -1;  // f = -1 when the drawing has crossings
};

inline Angle angle_at(const MultiGraph& g, const Faces* faces, int v, int e) {
  Angle a;
  a.v = v;
  a.e = e;
  a.e2 = g.clockwise_next(v, e);
  require(a.e2 != a.e, ErrorKind::BadInput, "no angle at a degree-one vertex");
  if (faces) a.f = faces->face_of[g.dart_from(a.e2, v)];
  return a;
}

inline std::vector<Angle> all_angles(const MultiGraph& g, const Faces* faces) {
  std::vector<Angle> out;
  for (int v = 0; v < g.nv(); ++v) {
    if (g.degree(v) < 2) continue;
    for (int e : g.rotation(v)) out.push_back(angle_at(g, faces, v, e));
  }
  std::sort(out.begin(), out.end(),
            [](const Angle& a, const Angle& b) { return std::tie(a.v, a.e) < std::tie(b.v, b.e); });
  return out;
}

namespace detail {
// Parent edge per vertex when `sub` is a spanning tree of g rooted at root;
// false otherwise.
inline bool tree_parents(const MultiGraph& g, const std::vector<char>& sub, int root,
                         std::vector<int>& parent_edge) {
  if (static_cast<int>(sub.size()) != g.ne()) return false;
  int cnt = 0;
  for (char c : sub) cnt += c != 0;
  if (cnt != g.nv() - 1) return false;
  parent_edge.assign(g.nv(), -1);
  std::vector<char> seen(g.nv(), 0);
  seen[root] = 1;
  std::vector<int> queue = {root};
  int reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : g.rotation(v)) {
      if (!sub[e]) continue;
      int w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = 1;
      parent_edge[w] = e;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached == g.nv();
}

// BFS over the faces through the permitted edges; parent_edge[f] = edge
// crossed to reach f (-1 at the root and on unreached faces). Returns the
// number of faces reached. This walks the dual graph without constructing
// it, so bridges (whose duals would be self-loops) need no special casing.
inline int face_tree(const Faces& faces, const std::vector<char>& allowed, int root,
                     std::vector<int>& parent_edge) {
  const int nf = num_faces(faces);
  parent_edge.assign(nf, -1);
  std::vector<char> seen(nf, 0);
  seen[root] = 1;
  std::vector<int> queue = {root};
  int reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    for (int d : faces.boundary[f]) {
      int e = dart_edge(d);
      if (!allowed[e]) continue;
      int f2 = faces.face_of[dart_opposite(d)];
      if (seen[f2]) continue;
      seen[f2] = 1;
      parent_edge[f2] = e;
      ++reached;
      queue.push_back(f2);
    }
  }
  return reached;
}
}  // namespace detail

inline std::vector<int> tree_parent_edges(const MultiGraph& g, const std::vector<char>& sub,
                                          int root,
                                          ErrorKind kind = ErrorKind::NotSpanningTree) {
  std::vector<int> pe;
  require(detail::tree_parents(g, sub, root, pe), kind, "edge set is not a spanning tree");
  return pe;
}

// A spanning tree with both arrow systems attached: every tree edge points
// through the tree at v*, and the dual of every non-tree edge points through
// the complementary dual tree at f*. The dual arrow of e is recorded as the
// face it leaves (its child side), which pins the direction without a dual
// graph object.
struct ArborescencePair {
  std::vector<char> in_tree;
  std::vector<int> toward_root;  // per edge: dart pointed at v*, -1 off the tree
  std::vector<int> dual_child;   // per edge: face its dual arrow exits, -1 on the tree
};

inline ArborescencePair arborescence_pair(const TreeContext& tc, std::vector<char> in_tree) {
  ArborescencePair p;
  auto pe = tree_parent_edges(tc.g, in_tree, tc.v_star);
  p.in_tree = std::move(in_tree);
  p.toward_root.assign(tc.g.ne(), -1);
  for (int v = 0; v < tc.g.nv(); ++v)
    if (pe[v] != -1) p.toward_root[pe[v]] = tc.g.dart_from(pe[v], v);

  // The duals of the non-tree edges always form a spanning tree of the dual.
  std::vector<char> co(tc.g.ne());
  for (int e = 0; e < tc.g.ne(); ++e) co[e] = !p.in_tree[e];
  std::vector<int> fpe;
  require(detail::face_tree(tc.faces, co, tc.f_star, fpe) == num_faces(tc.faces),
          ErrorKind::Internal, "non-tree duals do not span the faces");
  p.dual_child.assign(tc.g.ne(), -1);
  for (int f = 0; f < num_faces(tc.faces); ++f)
    if (fpe[f] != -1) p.dual_child[fpe[f]] = f;
  return p;
}

// Membership test for swinging: going down demands the angle's first edge to
// carry the tree arrow out of v and the successor's dual to carry the dual
// arrow out of f; going up is the mirror image.
inline bool pivotal(const TreeContext& tc, const ArborescencePair& p, const Angle& a,
                    bool down = true) {
  int d = tc.g.dart_from(a.e, a.v), d2 = tc.g.dart_from(a.e2, a.v);
  bool e_out = p.toward_root[a.e] == d;
  bool e2_out = p.toward_root[a.e2] == d2;
  bool de_out = p.dual_child[a.e] == a.f;
  bool de2_out = p.dual_child[a.e2] == a.f;
  return down ? e_out && !e2_out && de2_out && !de_out
              : e2_out && !e_out && de_out && !de2_out;
}

inline std::vector<Angle> pivotal_angles(const TreeContext& tc, const ArborescencePair& p,
                                         bool down = true) {
  std::vector<Angle> out;
  for (const Angle& a : all_angles(tc.g, &tc.faces))
    if (pivotal(tc, p, a, down)) out.push_back(a);
  return out;
}

// The definitional five-clause test, kept independent of the arrow encoding:
// (1) e in T, e2 not; (2) the exchange keeps a spanning tree; (3)/(4) the
// root path of v starts with e before and with e2 after; (5) the exchange
// cycle separates f from f*. A simple path from v starts with v's parent
// edge, so (3) and (4) collapse to a parent check.
struct SwingConditions {
  bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false;
  bool first_four() const { return c1 && c2 && c3 && c4; }
  bool all() const { return first_four() && c5; }
};

inline SwingConditions swing_conditions(const TreeContext& tc, const std::vector<char>& in_tree,
                                        const Angle& a) {
  SwingConditions c;
  c.c1 = in_tree[a.e] && !in_tree[a.e2];
  auto pe = tree_parent_edges(tc.g, in_tree, tc.v_star);
  c.c3 = pe[a.v] == a.e;
  std::vector<char> t2 = in_tree;
  t2[a.e] = !t2[a.e];
  t2[a.e2] = !t2[a.e2];
  std::vector<int> pe2;
  c.c2 = detail::tree_parents(tc.g, t2, tc.v_star, pe2);
  c.c4 = c.c2 && pe2[a.v] == a.e2;
  if (!c.c1 || !c.c2) return c;

  // The unique cycle of T union T' is e2 plus the tree path between its
  // ends; it separates f from f* exactly when removing its edges cuts the
  // dual between them.
  auto parent_of = [&](int x) { return tc.g.other_end(pe[x], x); };
  std::vector<char> on_cycle(tc.g.ne(), 0);
  on_cycle[a.e2] = 1;
  auto [u, w] = tc.g.ends(a.e2);
  std::vector<char> mark(tc.g.nv(), 0);
  for (int x = u;; x = parent_of(x)) {
    mark[x] = 1;
    if (pe[x] == -1) break;
  }
  int meet = w;
  while (!mark[meet]) meet = parent_of(meet);
  for (int x = u; x != meet; x = parent_of(x)) on_cycle[pe[x]] = 1;
  for (int x = w; x != meet; x = parent_of(x)) on_cycle[pe[x]] = 1;

  std::vector<char> open(tc.g.ne());
  for (int e = 0; e < tc.g.ne(); ++e) open[e] = !on_cycle[e];
  std::vector<int> fpe;
  detail::face_tree(tc.faces, open, a.f, fpe);
  c.c5 = a.f != tc.f_star && fpe[tc.f_star] == -1;
  return c;
}

// Crossing-tolerant variant, clauses (1)-(4) only; no faces are involved. In
// a planar outer-Hamiltonian drawing the fifth clause is implied by these;
// with crossings this relation is the whole definition.
inline bool swing_conditions_xing(const MultiGraph& g, const std::vector<char>& in_tree,
                                  const Angle& a, int v_star, bool down = true) {
  const int e = down ? a.e : a.e2, e2 = down ? a.e2 : a.e;
  if (!(in_tree[e] && !in_tree[e2])) return false;
  auto pe = tree_parent_edges(g, in_tree, v_star);
  if (pe[a.v] != e) return false;
  std::vector<char> t2 = in_tree;
  t2[e] = !t2[e];
  t2[e2] = !t2[e2];
  std::vector<int> pe2;
  if (!detail::tree_parents(g, t2, v_star, pe2)) return false;
  return pe2[a.v] == e2;
}

inline ArborescencePair swing(const TreeContext& tc, const ArborescencePair& p, const Angle& a,
                              bool down = true) {
  require(pivotal(tc, p, a, down), ErrorKind::NotPivotal,
          "angle is not pivotal in that direction");
  std::vector<char> t2 = p.in_tree;
  t2[a.e] = !t2[a.e];
  t2[a.e2] = !t2[a.e2];
  return arborescence_pair(tc, std::move(t2));
}

inline std::vector<char> swing_xing(const MultiGraph& g, const std::vector<char>& in_tree,
                                    const Angle& a, int v_star, bool down = true) {
  require(swing_conditions_xing(g, in_tree, a, v_star, down), ErrorKind::NotPivotal4,
          "angle fails the swing clauses");
  std::vector<char> t2 = in_tree;
  t2[a.e] = !t2[a.e];
  t2[a.e2] = !t2[a.e2];
  return t2;
}

// All spanning trees in increasing indicator order, by edge subset search
// with an acyclicity prune. Same size guard as the other enumerations.
inline std::vector<std::vector<char>> enumerate_spanning_trees(const MultiGraph& g) {
  require(g.ne() <= max_enumeration_edges(), ErrorKind::TooLarge,
          "too many edges to enumerate; raise ORIENT_LATTICE_MAX_EDGES");
  std::vector<std::vector<char>> out;
  std::vector<char> cur(g.ne(), 0);
  auto find = [](std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  std::vector<int> roots(g.nv());
  for (int v = 0; v < g.nv(); ++v) roots[v] = v;
  auto rec = [&](auto&& self, int e, std::vector<int> comp, int picked) -> void {
    if (picked == g.nv() - 1) {
      out.push_back(cur);
      return;
    }
    if (e == g.ne() || picked + (g.ne() - e) < g.nv() - 1) return;
    self(self, e + 1, comp, picked);
    int a = find(comp, g.ends(e).u), b = find(comp, g.ends(e).v);
    if (a != b) {
      auto comp2 = comp;
      comp2[a] = b;
      cur[e] = 1;
      self(self, e + 1, std::move(comp2), picked + 1);
      cur[e] = 0;
    }
  };
  rec(rec, 0, roots, 0);
  return out;
}

// ---------------------------------------------------------------------------
// The incidence graph H(v*, f*): one node per vertex, edge, and face of the
// drawing, spokes joining every edge node to its endpoints and side faces,
// minus the nodes of v* and f*. Edge nodes are black; Euler's formula makes
// the sides balance. Each edge node sits at its edge's midpoint with
// clockwise spokes [head, right face, tail, left face], which keeps the
// sphere intact: every angle of the drawing away from v* and f* becomes a
// quadrilateral face of H, and the faces that lost a node merge into a
// single leftover, the base face of the matching lattice.

struct HasseGraphH {
  MultiGraph h;
  int v_star = 0, f_star = 0;
  std::vector<int> vbar, fbar, ebar;  // primal index -> node id, -1 where deleted
  std::vector<int> kind;              // per node: 0 vertex, 1 face, 2 edge
  std::vector<int> ref;               // per node: primal index
  std::vector<char> black;            // edge nodes
  std::vector<int> sv_tail, sv_head;  // per primal edge: spoke to each endpoint, -1 cut
  std::vector<int> sf_left, sf_right; // per primal edge: spoke to each side, -1 cut
  Faces faces_h;
  int f_star_h = -1;  // the merged face; -1 when the merge is degenerate
  std::map<std::pair<int, int>, int> quad;  // angle (v, e) -> its face of H

  int vertex_spoke(int e, int v, const MultiGraph& g) const {
    return g.ends(e).u == v ? sv_tail[e] : sv_head[e];
  }
};

inline HasseGraphH hasse_graph_h(const MultiGraph& g, const Faces& faces, int v_star,
                                 int f_star) {
  require(0 <= v_star && v_star < g.nv(), ErrorKind::BadInput, "base vertex out of range");
  require(0 <= f_star && f_star < num_faces(faces), ErrorKind::BadInput,
          "base face out of range");
  bool incident = false;
  for (int d : faces.boundary[f_star])
    if (g.tail(d) == v_star) incident = true;
  require(incident, ErrorKind::NotIncident, "base vertex does not lie on the base face");

  HasseGraphH H;
  H.v_star = v_star;
  H.f_star = f_star;
  const int nv = g.nv(), ne = g.ne(), nf = num_faces(faces);
  H.vbar.assign(nv, -1);
  H.fbar.assign(nf, -1);
  H.ebar.assign(ne, -1);
  auto add_node = [&](int kind, int ref) {
    H.kind.push_back(kind);
    H.ref.push_back(ref);
    return static_cast<int>(H.kind.size()) - 1;
  };
  for (int v = 0; v < nv; ++v)
    if (v != v_star) H.vbar[v] = add_node(0, v);
  for (int f = 0; f < nf; ++f)
    if (f != f_star) H.fbar[f] = add_node(1, f);
  for (int e = 0; e < ne; ++e) H.ebar[e] = add_node(2, e);

  std::vector<EdgeEnds> spokes;
  H.sv_tail.assign(ne, -1);
  H.sv_head.assign(ne, -1);
  H.sf_left.assign(ne, -1);
  H.sf_right.assign(ne, -1);
  for (int e = 0; e < ne; ++e) {
    auto add_spoke = [&](int node, int& slot) {
      if (node < 0) return;
      slot = static_cast<int>(spokes.size());
      spokes.push_back({H.ebar[e], node});
    };
    add_spoke(H.vbar[g.ends(e).v], H.sv_head[e]);
    add_spoke(H.fbar[right_face(faces, dart_fwd(e))], H.sf_right[e]);
    add_spoke(H.vbar[g.ends(e).u], H.sv_tail[e]);
    add_spoke(H.fbar[left_face(faces, dart_fwd(e))], H.sf_left[e]);
  }

  std::vector<std::vector<int>> rot(H.kind.size());
  for (int v = 0; v < nv; ++v) {
    if (v == v_star) continue;
    for (int e : g.rotation(v)) rot[H.vbar[v]].push_back(H.vertex_spoke(e, v, g));
  }
  for (int f = 0; f < nf; ++f) {
    if (f == f_star) continue;
    const auto& cyc = faces.boundary[f];
    for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) {
      int e = dart_edge(*it);
      rot[H.fbar[f]].push_back(dart_reversed(*it) ? H.sf_right[e] : H.sf_left[e]);
    }
  }
  for (int e = 0; e < ne; ++e)
    for (int s : {H.sv_head[e], H.sf_right[e], H.sv_tail[e], H.sf_left[e]})
      if (s >= 0) rot[H.ebar[e]].push_back(s);

  H.h = MultiGraph::build(static_cast<int>(H.kind.size()), std::move(spokes), std::move(rot));
  require(H.h.nv() == 2 * ne, ErrorKind::Internal, "incidence counts violate Euler's formula");
  H.black.assign(H.h.nv(), 0);
  for (int n = 0; n < H.h.nv(); ++n) H.black[n] = H.kind[n] == 2;
  H.faces_h = trace_faces(H.h);

  std::set<int> used;
  for (const Angle& a : all_angles(g, &faces)) {
    if (a.v == v_star || a.f == f_star) continue;
    int spoke2 = H.vertex_spoke(a.e2, a.v, g);
    int qf = H.faces_h.face_of[H.h.dart_from(spoke2, H.vbar[a.v])];
    require(used.insert(qf).second, ErrorKind::Internal, "angle faces collide");
    H.quad[{a.v, a.e}] = qf;
  }
  if (static_cast<int>(used.size()) + 1 == num_faces(H.faces_h)) {
    for (int f = 0; f < num_faces(H.faces_h); ++f)
      if (!used.count(f)) H.f_star_h = f;
  }
  return H;
}

inline HasseGraphH hasse_graph_h(const TreeContext& tc) {
  return hasse_graph_h(tc.g, tc.faces, tc.v_star, tc.f_star);
}

// Pair every vertex node with its outgoing tree edge and every face node
// with its outgoing dual edge; every edge node gets used exactly once.
inline DFactor temperley(const TreeContext& tc, const HasseGraphH& H,
                         const ArborescencePair& p) {
  DFactor m(H.h.ne(), 0);
  for (int e = 0; e < tc.g.ne(); ++e) {
    if (p.toward_root[e] != -1) {
      int child = tc.g.tail(p.toward_root[e]);
      int s = H.vertex_spoke(e, child, tc.g);
      require(s != -1, ErrorKind::Internal, "tree arrow leaves the base vertex");
      m[s] = 1;
    }
    if (p.dual_child[e] != -1) {
      int child = p.dual_child[e];
      int s = left_face(tc.faces, dart_fwd(e)) == child ? H.sf_left[e] : H.sf_right[e];
      require(s != -1, ErrorKind::Internal, "dual arrow leaves the base face");
      m[s] = 1;
    }
  }
  for (int n = 0; n < H.h.nv(); ++n)
    require(factor_degree(H.h, m, n) == 1, ErrorKind::Internal, "pairing misses a node");
  return m;
}

// Inverse direction: the tree is read off as the edges whose node pairs with
// a vertex node.
inline std::vector<char> temperley_inv(const HasseGraphH& H, const DFactor& m) {
  require(static_cast<int>(m.size()) == H.h.ne(), ErrorKind::BadInput, "matching size");
  for (int n = 0; n < H.h.nv(); ++n)
    require(factor_degree(H.h, m, n) == 1, ErrorKind::NotPerfectMatching,
            "input is not a perfect matching of H");
  std::vector<char> in_tree(H.ebar.size(), 0);
  for (size_t e = 0; e < H.ebar.size(); ++e)
    in_tree[e] = (H.sv_tail[e] >= 0 && m[H.sv_tail[e]]) ||
                 (H.sv_head[e] >= 0 && m[H.sv_head[e]]);
  return in_tree;
}

// The lattice of spanning trees: order and covers come from the perfect
// matchings of H with the merged face as base, and the swing moves are
// checked against the matching covers on construction.
struct TreeLattice {
  TreeContext tc;
  HasseGraphH hg;
  DualContext ctx_h;  // dual machinery over H, for twists
  DFactorLattice matchings;
  std::vector<std::vector<char>> trees;  // aligned with matchings.members
  std::vector<ArborescencePair> pairs;
};

inline TreeLattice tree_lattice(const TreeContext& tc) {
  TreeLattice L;
  L.tc = tc;
  L.hg = hasse_graph_h(tc);
  require(L.hg.f_star_h >= 0, ErrorKind::Internal, "merged base face is degenerate");
  L.ctx_h = make_dual_context(L.hg.h, L.hg.faces_h, L.hg.black);
  L.matchings = dfactor_lattice(L.ctx_h, DegreeSpec(L.hg.h.nv(), 1), L.hg.f_star_h);
  std::map<std::vector<char>, int> index;
  for (size_t i = 0; i < L.matchings.members.size(); ++i) {
    L.trees.push_back(temperley_inv(L.hg, L.matchings.members[i]));
    L.pairs.push_back(arborescence_pair(tc, L.trees.back()));
    index[L.trees.back()] = static_cast<int>(i);
  }

  std::set<std::pair<int, int>> swings;
  size_t moves = 0;
  for (size_t i = 0; i < L.trees.size(); ++i)
    for (const Angle& a : pivotal_angles(tc, L.pairs[i])) {
      std::vector<char> t2 = L.trees[i];
      t2[a.e] = !t2[a.e];
      t2[a.e2] = !t2[a.e2];
      auto it = index.find(t2);
      require(it != index.end(), ErrorKind::Internal, "swing leaves the tree set");
      swings.insert({static_cast<int>(i), it->second});
      ++moves;
    }
  std::set<std::pair<int, int>> covers(L.matchings.hasse.covers.begin(),
                                       L.matchings.hasse.covers.end());
  require(swings == covers && moves == covers.size(), ErrorKind::Internal,
          "swing moves disagree with the matching covers");
  return L;
}

// ---------------------------------------------------------------------------
// Rank structure and the crossing specialization.

inline std::vector<long long> rank_polynomial(const std::vector<int>& rank, bool graded) {
  require(graded, ErrorKind::NotGraded, "rank polynomial needs a graded diagram");
  int top = 0;
  for (int r : rank) top = std::max(top, r);
  std::vector<long long> p(top + 1, 0);
  for (int r : rank) p[r] += 1;
  return p;
}

inline std::vector<long long> rank_polynomial(const Hasse& h) {
  return rank_polynomial(h.rank, h.graded);
}

// The angle at each vertex whose sector lies in the unbounded region is
// never a swing site (in the planar case its face is f* itself, so the
// separation clause can never hold). With crossings the rotations alone
// cannot tell which angle that is, so the encircling cycle is passed in as
// the vertices of the hull in counterclockwise placement order. Returns the
// first edge of the exterior angle at each hull vertex.
inline std::vector<int> exterior_angle_edges(const MultiGraph& g, std::vector<int> ring) {
  if (ring.empty()) {
    ring.resize(g.nv());
    for (int v = 0; v < g.nv(); ++v) ring[v] = v;
  }
  require(static_cast<int>(ring.size()) == g.nv(), ErrorKind::NotOuterHamiltonian,
          "encircling cycle must visit every vertex");
  std::vector<char> seen(g.nv(), 0);
  for (int v : ring) {
    require(0 <= v && v < g.nv() && !seen[v], ErrorKind::NotOuterHamiltonian,
            "encircling cycle revisits a vertex");
    seen[v] = 1;
  }
  const int n = g.nv();
  std::vector<int> first_edge(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ring[i], succ = ring[(i + 1) % n], pred = ring[(i + n - 1) % n];
    int e = -1;
    for (int cand : g.rotation(v))
      if (g.other_end(cand, v) == succ) {
        require(e == -1, ErrorKind::BadInput, "parallel hull edges are ambiguous");
        e = cand;
      }
    require(e != -1, ErrorKind::NotOuterHamiltonian, "hull edge missing from the graph");
    require(g.other_end(g.clockwise_next(v, e), v) == pred, ErrorKind::NotOuterHamiltonian,
            "rotations disagree with the encircling cycle");
    first_edge[v] = e;
  }
  return first_edge;
}

// Order on the spanning trees of a drawing with crossings, generated by the
// four-clause swings at the non-exterior angles (there is no dual to
// consult).
struct SwingPoset {
  std::vector<std::vector<char>> trees;     // increasing indicator order
  std::vector<std::pair<int, int>> covers;  // (upper, lower)
  std::vector<int> rank;
  bool graded = false;
};

inline SwingPoset swing_poset_xing(const MultiGraph& g, int v_star,
                                   const std::vector<int>& ring = {}) {
  auto exterior = exterior_angle_edges(g, ring);
  SwingPoset sp;
  sp.trees = enumerate_spanning_trees(g);
  require(!sp.trees.empty(), ErrorKind::Internal, "connected graph has a spanning tree");
  std::map<std::vector<char>, int> index;
  for (size_t i = 0; i < sp.trees.size(); ++i) index[sp.trees[i]] = static_cast<int>(i);
  auto angles = all_angles(g, nullptr);
  std::set<std::pair<int, int>> covers;
  for (size_t i = 0; i < sp.trees.size(); ++i)
    for (const Angle& a : angles) {
      if (a.e == exterior[a.v]) continue;
      if (swing_conditions_xing(g, sp.trees[i], a, v_star)) {
        std::vector<char> t2 = sp.trees[i];
        t2[a.e] = !t2[a.e];
        t2[a.e2] = !t2[a.e2];
        covers.insert({static_cast<int>(i), index.at(t2)});
      }
    }
  sp.covers.assign(covers.begin(), covers.end());
  std::vector<std::pair<int, int>> upward;
  for (auto [hi, lo] : sp.covers) upward.emplace_back(lo, hi);
  sp.rank = longest_chain_ranks(static_cast<int>(sp.trees.size()), upward);
  sp.graded = is_graded(static_cast<int>(sp.trees.size()), upward);
  return sp;
}

// ---------------------------------------------------------------------------
// For a planar outer-Hamiltonian drawing the poset of join-irreducibles can
// be read straight off the picture: one circle per bounded angle away from
// v*, chained clockwise around each vertex (broken at the outer angle) and
// clockwise around each bounded face (broken at v* and at the face's exit
// edge). The exit edges form the arborescence left after cutting the outer
// dual spokes down to the one dual to the boundary edge arriving at v*, and
// an arrow from one circle to the next steps down the order.

struct AnglePoset {
  std::vector<Angle> elements;  // sorted by (v, e)
  Poset poset;
};

inline AnglePoset angle_poset(const TreeContext& tc) {
  const MultiGraph& g = tc.g;
  const auto& bnd = tc.faces.boundary[tc.f_star];
  require(static_cast<int>(bnd.size()) == g.nv(), ErrorKind::NotOuterHamiltonian,
          "outer boundary must be a Hamiltonian cycle");
  {
    std::vector<char> seen(g.nv(), 0);
    for (int d : bnd) {
      int t = g.tail(d);
      require(!seen[t], ErrorKind::NotOuterHamiltonian, "outer boundary revisits a vertex");
      seen[t] = 1;
    }
  }

  // The kept dual spoke crosses the edge joining v* to its counterclockwise
  // neighbour, which is the edge the (clockwise) outer walk arrives by.
  int keep = -1;
  for (int d : bnd)
    if (g.head(d) == tc.v_star) keep = dart_edge(d);
  require(keep != -1, ErrorKind::Internal, "base vertex missing from its own face");

  std::vector<char> allowed(g.ne(), 1);
  for (int e = 0; e < g.ne(); ++e) {
    bool outer = left_face(tc.faces, dart_fwd(e)) == tc.f_star ||
                 right_face(tc.faces, dart_fwd(e)) == tc.f_star;
    if (outer && e != keep) allowed[e] = 0;
  }
  int kept = 0;
  for (char c : allowed) kept += c != 0;
  require(kept == num_faces(tc.faces) - 1, ErrorKind::Internal, "pruned dual has wrong size");
  std::vector<int> exit_of;
  require(detail::face_tree(tc.faces, allowed, tc.f_star, exit_of) == num_faces(tc.faces),
          ErrorKind::Internal, "pruned dual is not spanning");

  AnglePoset out;
  std::map<std::pair<int, int>, int> index;
  for (const Angle& a : all_angles(g, &tc.faces)) {
    if (a.v == tc.v_star || a.f == tc.f_star) continue;
    index[{a.v, a.e}] = static_cast<int>(out.elements.size());
    out.elements.push_back(a);
  }

  std::vector<std::pair<int, int>> below;
  // Clockwise chains around the vertices.
  for (const Angle& a : out.elements) {
    Angle b = angle_at(g, &tc.faces, a.v, a.e2);
    if (b.f == tc.f_star) continue;
    below.emplace_back(index.at({b.v, b.e}), index.at({a.v, a.e}));
  }
  // Clockwise chains around the bounded faces. Corner j of the (ccw) face
  // walk is the angle at the head of dart j; clockwise arrows run from
  // corner j+1 to corner j across the shared boundary edge.
  for (int f = 0; f < num_faces(tc.faces); ++f) {
    if (f == tc.f_star) continue;
    const auto& cyc = tc.faces.boundary[f];
    const int len = static_cast<int>(cyc.size());
    for (int j = 0; j < len; ++j) {
      int d_next = cyc[(j + 1) % len];
      int shared = dart_edge(d_next);
      if (shared == exit_of[f]) continue;
      int va = g.head(cyc[j]), vb = g.head(d_next);
      if (va == tc.v_star || vb == tc.v_star) continue;
      below.emplace_back(index.at({va, dart_edge(cyc[j])}), index.at({vb, shared}));
    }
  }
  out.poset = Poset::from_relations(static_cast<int>(out.elements.size()), below);
  return out;
}

}  // namespace latgraph

#endif  // LATGRAPH_TREE_HPP
