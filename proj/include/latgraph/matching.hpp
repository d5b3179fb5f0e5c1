#ifndef LATGRAPH_MATCHING_HPP
#define LATGRAPH_MATCHING_HPP

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "latgraph/multigraph.hpp"
#include "latgraph/orientation.hpp"
#include "latgraph/planar.hpp"
#include "latgraph/region.hpp"

namespace latgraph {

// Sub-multigraphs with prescribed vertex degrees, encoded as one flag per
// edge. Degree one everywhere is a perfect matching. On a bipartite graph
// embedded in the sphere these correspond to orientations of the dual with
// a fixed circulation and so inherit the whole lattice machinery: twisting
// an alternating face is pushing at the matching dual vertex.
using DFactor = std::vector<char>;
using DegreeSpec = std::vector<int>;

inline int factor_degree(const MultiGraph& g, const DFactor& m, int v) {
  int d = 0;
  for (int e : g.rotation(v)) d += m[e];
  return d;
}

inline void require_dfactor(const MultiGraph& g, const DegreeSpec& deg, const DFactor& m) {
  require(static_cast<int>(m.size()) == g.ne() &&
              static_cast<int>(deg.size()) == g.nv(),
          ErrorKind::BadInput, "size mismatch");
  for (int v = 0; v < g.nv(); ++v)
    require(factor_degree(g, m, v) == deg[v], ErrorKind::NotAFactor,
            "vertex degree differs from the prescription");
}

// Everything the dual correspondence needs, built once per graph: the
// embedding, the dual, and the standard orientation of dual edges (white
// primal head on the mover's left, which circles white primal vertices one
// way and black ones the other). Dual edges share primal edge ids.
struct DualContext {
  MultiGraph primal;
  std::vector<char> black;  // primal bipartition coloring
  Faces faces;
  MultiGraph dual;
  Orientation standard;
};

inline DualContext make_dual_context(const MultiGraph& g, Faces faces, std::vector<char> black) {
  DualContext ctx;
  ctx.primal = g;
  for (int e = 0; e < g.ne(); ++e)
    require(black[g.ends(e).u] != black[g.ends(e).v], ErrorKind::NotBipartite,
            "coloring does not alternate across an edge");
  ctx.black = std::move(black);
  ctx.faces = std::move(faces);
  ctx.dual = dual_graph(g, ctx.faces);
  ctx.standard.resize(g.ne());
  for (int e = 0; e < g.ne(); ++e) ctx.standard[e] = ctx.black[g.ends(e).v] ? 0 : 1;
  return ctx;
}

inline DualContext make_dual_context(const MultiGraph& g, Faces faces) {
  return make_dual_context(g, std::move(faces), bipartite_coloring(g));
}

inline DualContext make_dual_context(const MultiGraph& g) {
  return make_dual_context(g, trace_faces(g));
}

inline DualContext make_dual_context(const RegionGraph& rg) {
  // Keep the drawing's colors, not the BFS ones.
  return make_dual_context(rg.g, trace_faces(rg.g), rg.black);
}

// A dual edge leaves the standard direction exactly when its primal edge is
// in the factor.
inline Orientation orientation_of_dfactor(const DualContext& ctx, const DFactor& m) {
  Orientation o(ctx.dual.ne());
  for (int e = 0; e < ctx.dual.ne(); ++e) o[e] = m[e] ? !ctx.standard[e] : ctx.standard[e];
  return o;
}

inline DFactor dfactor_of_orientation(const DualContext& ctx, const Orientation& o) {
  require_orientation(ctx.dual, o);
  DFactor m(ctx.dual.ne());
  for (int e = 0; e < ctx.dual.ne(); ++e) m[e] = (o[e] != ctx.standard[e]);
  return m;
}

// Per face: +1 when the boundary alternates and the face can twist down
// (its dual vertex is a sink), -1 for the upward kind (a source), 0 when
// the boundary does not alternate.
inline std::vector<int> alternating_faces(const DualContext& ctx, const DFactor& m) {
  Orientation o = orientation_of_dfactor(ctx, m);
  std::vector<int> sign(ctx.dual.nv(), 0);
  for (int f = 0; f < ctx.dual.nv(); ++f) {
    bool all_in = true, all_out = true;
    for (int e : ctx.dual.rotation(f)) {
      if (agrees(o, ctx.dual.dart_from(e, f))) all_in = false; else all_out = false;
    }
    sign[f] = all_in ? 1 : (all_out ? -1 : 0);
  }
  return sign;
}

// Swap the two alternating halves of a face boundary. The raw move; lattice
// traversals go through the dual push operations instead, which also refuse
// the base face.
inline DFactor twist(const DualContext& ctx, const DFactor& m, int face, bool down) {
  auto sign = alternating_faces(ctx, m);
  require(face >= 0 && face < ctx.dual.nv(), ErrorKind::BadInput, "no such face");
  require(sign[face] == (down ? 1 : -1), ErrorKind::NotAlternating,
          "face boundary does not alternate the right way");
  DFactor out = m;
  for (int e : ctx.dual.rotation(face)) out[e] ^= 1;
  return out;
}

// All sub-multigraphs with the prescribed degrees, in increasing
// edge-indicator order. Same search-size guard as orientation enumeration.
inline std::vector<DFactor> enumerate_dfactors(const MultiGraph& g, const DegreeSpec& deg) {
  require(static_cast<int>(deg.size()) == g.nv(), ErrorKind::BadInput, "degree spec size");
  for (int v = 0; v < g.nv(); ++v)
    require(0 <= deg[v] && deg[v] <= g.degree(v), ErrorKind::BadInput,
            "prescribed degree out of range");
  require(g.ne() <= max_enumeration_edges(), ErrorKind::TooLarge,
          "too many edges to enumerate; raise ORIENT_LATTICE_MAX_EDGES");

  std::vector<DFactor> out;
  DFactor m(g.ne(), 0);
  std::vector<int> picked(g.nv(), 0), undecided(g.nv());
  for (int v = 0; v < g.nv(); ++v) undecided[v] = g.degree(v);

  auto feasible = [&](int v) {
    return picked[v] <= deg[v] && picked[v] + undecided[v] >= deg[v];
  };
  auto rec = [&](auto&& self, int e) -> void {
    if (e == g.ne()) {
      out.push_back(m);
      return;
    }
    auto [u, v] = g.ends(e);
    --undecided[u];
    --undecided[v];
    for (int take : {0, 1}) {
      m[e] = take;
      picked[u] += take;
      picked[v] += take;
      if (feasible(u) && feasible(v)) self(self, e + 1);
      picked[u] -= take;
      picked[v] -= take;
    }
    m[e] = 0;
    ++undecided[u];
    ++undecided[v];
  };
  rec(rec, 0);
  return out;
}

// The lattice of all factors with the degrees of the seed, ordered through
// the dual orientations with the base face playing v*. Members are listed
// in dual-orientation order; hasse/ranks come straight from the dual.
struct DFactorLattice {
  std::vector<DFactor> members;
  std::vector<Orientation> dual_members;
  Hasse hasse;
};

inline DFactorLattice dfactor_lattice(const DualContext& ctx, const DegreeSpec& deg,
                                      int f_star) {
  auto factors = enumerate_dfactors(ctx.primal, deg);
  require(!factors.empty(), ErrorKind::NoFactor, "no factor matches the degree spec");
  DFactorLattice lat;
  lat.dual_members.reserve(factors.size());
  for (const auto& m : factors) lat.dual_members.push_back(orientation_of_dfactor(ctx, m));
  std::sort(lat.dual_members.begin(), lat.dual_members.end());
  lat.members.reserve(factors.size());
  for (const auto& o : lat.dual_members) lat.members.push_back(dfactor_of_orientation(ctx, o));
  lat.hasse = hasse_diagram(ctx.dual, lat.dual_members, f_star);
  return lat;
}

// Integer height of every face relative to a reference factor, zero at the
// base face: the signed count of factor edges crossed on a dual walk, with
// the reference's crossings subtracted to make it path-independent.
inline std::vector<long long> face_heights(const DualContext& ctx, const DFactor& m,
                                           const DFactor& m_ref, int f_star) {
  return height_difference(ctx.dual, orientation_of_dfactor(ctx, m),
                           orientation_of_dfactor(ctx, m_ref), f_star);
}

// The face with the longest boundary, lowest index on ties: the unbounded
// face of every region drawing in this library.
inline int outer_face(const Faces& f) {
  int best = 0;
  for (int i = 1; i < num_faces(f); ++i)
    if (f.boundary[i].size() > f.boundary[best].size()) best = i;
  return best;
}

// Classical corner heights of a domino tiling, in quarter units: walking a
// lattice-point step with a black cell position on the left adds 1/4, or
// subtracts 3/4 when the step crosses a domino; white on the left negates.
// Anchored at zero on the first point in row-major order.
struct DominoHeights {
  std::vector<std::pair<int, int>> points;  // (x, y), sorted by (y, x)
  std::vector<Rat> h;
  std::vector<char> interior;  // surrounded by four region cells

  int point_index(int x, int y) const {
    auto key = std::pair(y, x);
    auto it = std::lower_bound(points.begin(), points.end(), key,
                               [](const auto& c, const auto& k) {
                                 return std::pair(c.second, c.first) < k;
                               });
    if (it == points.end() || std::pair(it->second, it->first) != key) return -1;
    return static_cast<int>(it - points.begin());
  }
};

inline DominoHeights domino_heights(const RegionGraph& rg, const DFactor& m) {
  require(rg.region.kind == RegionKind::Squares, ErrorKind::BadInput,
          "domino heights need a square-cell region");
  require(static_cast<int>(m.size()) == rg.g.ne(), ErrorKind::BadInput, "factor size");
  for (int v = 0; v < rg.g.nv(); ++v)
    require(factor_degree(rg.g, m, v) == 1, ErrorKind::NotPerfectMatching,
            "dominoes must cover every cell exactly once");
  DominoHeights out;
  for (auto [x, y] : rg.region.cells) {
    const std::array<std::pair<int, int>, 4> corners{
        {{x, y}, {x + 1, y}, {x, y + 1}, {x + 1, y + 1}}};
    for (auto [px, py] : corners) out.points.emplace_back(px, py);
  }
  std::sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());

  const int np = static_cast<int>(out.points.size());
  out.interior.assign(np, 1);
  for (int i = 0; i < np; ++i) {
    auto [x, y] = out.points[i];
    const std::array<std::pair<int, int>, 4> around{
        {{x - 1, y - 1}, {x, y - 1}, {x - 1, y}, {x, y}}};
    for (auto [cx, cy] : around)
      if (rg.cell_index(cx, cy) < 0) out.interior[i] = 0;
  }

  // Step increment in quarters from point a toward point b; (lx, ly) is the
  // cell position on the mover's left. The step is legal when a flanking
  // cell lies in the region.
  auto increment = [&](std::pair<int, int> a, std::pair<int, int> b) -> std::pair<bool, int> {
    int dx = b.first - a.first, dy = b.second - a.second;
    std::pair<int, int> left, right;
    if (dx == 1) { left = {a.first, a.second}; right = {a.first, a.second - 1}; }
    else if (dx == -1) { left = {b.first, b.second - 1}; right = {b.first, b.second}; }
    else if (dy == 1) { left = {a.first - 1, a.second}; right = {a.first, a.second}; }
    else { left = {b.first, b.second}; right = {b.first - 1, b.second}; }
    int li = rg.cell_index(left.first, left.second);
    int ri = rg.cell_index(right.first, right.second);
    if (li < 0 && ri < 0) return {false, 0};
    bool crossed = false;
    if (li >= 0 && ri >= 0) {
      for (int e : rg.g.rotation(li))
        if (rg.g.other_end(e, li) == ri && m[e]) crossed = true;
    }
    bool black_left = cell_is_black(RegionKind::Squares, left.first, left.second);
    int inc = crossed ? -3 : 1;
    return {true, black_left ? inc : -inc};
  };

  out.h.assign(np, Rat(0));
  std::vector<char> seen(np, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    auto [x, y] = out.points[i];
    const std::array<std::pair<int, int>, 4> steps{
        {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}}};
    for (auto [nx, ny] : steps) {
      int j = out.point_index(nx, ny);
      if (j < 0) continue;
      auto [legal, inc] = increment(out.points[i], out.points[j]);
      if (!legal) continue;
      Rat hj = out.h[i] + Rat(inc, 4);
      if (!seen[j]) {
        seen[j] = 1;
        out.h[j] = hj;
        queue.push_back(j);
      } else {
        require(out.h[j] == hj, ErrorKind::NotSimplyConnected,
                "walk increments disagree around a hole");
      }
    }
  }
  require(std::all_of(seen.begin(), seen.end(), [](char c) { return c; }),
          ErrorKind::Internal, "point grid disconnected");
  return out;
}

}  // namespace latgraph

#endif  // LATGRAPH_MATCHING_HPP
