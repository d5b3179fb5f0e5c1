#ifndef LATGRAPH_TORUS_HPP
#define LATGRAPH_TORUS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "latgraph/matching.hpp"

namespace latgraph {

// Square grid on the torus: w columns, h rows of vertices, both wrapping.
// Faces keep their quadrilateral structure but twists no longer connect all
// factors; the obstruction is the pair of circulations around the two
// non-contractible dual generators, computed here.
struct TorusGrid {
  DualContext ctx;  // faces traced on the torus, euler 0
  int w = 0, h = 0;
  std::vector<std::vector<int>> face_at;        // [y][x] -> dual vertex
  std::vector<std::array<long long, 2>> winding;  // per dual dart: face step (dx, dy)
  std::vector<int> gen_right, gen_down;         // closed dual dart walks

  int vertex(int x, int y) const { return y * w + x; }
  // Edge from (x, y) to (x+1 mod w, y).
  int hedge(int x, int y) const { return y * w + x; }
  // Edge from (x, y) to (x, y+1 mod h).
  int vedge(int x, int y) const { return w * h + y * w + x; }
};

inline TorusGrid torus_grid(int w, int h) {
  require(w >= 3 && h >= 3 && w % 2 == 0 && h % 2 == 0, ErrorKind::BadInput,
          "torus grid needs even sides of length at least four");
  TorusGrid t;
  t.w = w;
  t.h = h;
  const int nv = w * h;
  std::vector<EdgeEnds> edges(2 * nv);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      edges[t.hedge(x, y)] = {t.vertex(x, y), t.vertex((x + 1) % w, y)};
      edges[t.vedge(x, y)] = {t.vertex(x, y), t.vertex(x, (y + 1) % h)};
    }
  std::vector<std::vector<int>> rotation(nv);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      auto& rot = rotation[t.vertex(x, y)];
      rot.push_back(t.vedge(x, (y + h - 1) % h));  // up
      rot.push_back(t.hedge(x, y));                // right
      rot.push_back(t.vedge(x, y));                // down
      rot.push_back(t.hedge((x + w - 1) % w, y));  // left
    }
  MultiGraph g = MultiGraph::build(nv, std::move(edges), std::move(rotation));

  Faces faces = trace_faces_surface(g);
  require(faces.euler == 0, ErrorKind::NotTorus, "embedding does not have genus one");
  t.ctx = make_dual_context(g, std::move(faces));
  for (int y = 0; y < h; ++y)  // keep the drawing's colors
    for (int x = 0; x < w; ++x) t.ctx.black[t.vertex(x, y)] = (x + y) % 2 == 0;
  for (int e = 0; e < g.ne(); ++e)
    t.ctx.standard[e] = t.ctx.black[g.ends(e).v] ? 0 : 1;

  // Identify each traced face with its cell: face (x, y) spans columns
  // x..x+1 and rows y..y+1 and is bounded by a known edge quadruple.
  std::map<std::vector<int>, std::pair<int, int>> expect;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      std::vector<int> quad{t.hedge(x, y), t.hedge(x, (y + 1) % h),
                            t.vedge(x, y), t.vedge((x + 1) % w, y)};
      std::sort(quad.begin(), quad.end());
      expect[quad] = {x, y};
    }
  require(num_faces(t.ctx.faces) == w * h, ErrorKind::Internal, "face count");
  t.face_at.assign(h, std::vector<int>(w, -1));
  std::vector<std::pair<int, int>> cell_of(w * h);
  for (int f = 0; f < num_faces(t.ctx.faces); ++f) {
    std::vector<int> quad;
    for (int d : t.ctx.faces.boundary[f]) quad.push_back(dart_edge(d));
    std::sort(quad.begin(), quad.end());
    auto it = expect.find(quad);
    require(it != expect.end(), ErrorKind::Internal, "untraceable face");
    auto [x, y] = it->second;
    t.face_at[y][x] = f;
    cell_of[f] = {x, y};
  }

  // Winding of a dual dart: the face-lattice step it takes, right and down
  // positive. Unambiguous because both sides exceed two.
  t.winding.assign(2 * t.ctx.dual.ne(), {0, 0});
  for (int e = 0; e < t.ctx.dual.ne(); ++e) {
    auto [fu, fv] = t.ctx.dual.ends(e);
    auto [xu, yu] = cell_of[fu];
    auto [xv, yv] = cell_of[fv];
    std::array<long long, 2> step{0, 0};
    if (e >= w * h) {  // vertical primal edge: horizontal dual step
      step[0] = (xv == (xu + 1) % w) ? 1 : -1;
    } else {
      step[1] = (yv == (yu + 1) % h) ? 1 : -1;
    }
    t.winding[dart_fwd(e)] = step;
    t.winding[dart_rev(e)] = {-step[0], -step[1]};
  }

  for (int x = 0; x < w; ++x)
    t.gen_right.push_back(t.ctx.dual.dart_from(t.vedge((x + 1) % w, 0), t.face_at[0][x]));
  for (int y = 0; y < h; ++y)
    t.gen_down.push_back(t.ctx.dual.dart_from(t.hedge(0, (y + 1) % h), t.face_at[y][0]));
  return t;
}

// The twist-invariant class of a factor: circulations of its dual
// orientation around the two generator walks.
inline std::pair<long long, long long> cohomology_of(const TorusGrid& t, const DFactor& m) {
  Orientation o = orientation_of_dfactor(t.ctx, m);
  return {circulation(o, t.gen_right), circulation(o, t.gen_down)};
}

// True when some forward directed cycle wraps around the torus: a strongly
// connected part of the orientation admits no single-valued winding
// potential.
inline bool noncontractible_forward_cycle(const TorusGrid& t, const Orientation& o) {
  const MultiGraph& d = t.ctx.dual;
  auto part = accessibility_partition(d, o);
  std::vector<std::array<long long, 2>> pot(d.nv());
  std::vector<char> seen(d.nv(), 0);
  for (int root = 0; root < d.nv(); ++root) {
    if (seen[root]) continue;
    pot[root] = {0, 0};
    seen[root] = 1;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (int e : d.rotation(f)) {
        int dart = d.dart_from(e, f);
        if (!agrees(o, dart)) continue;  // follow forward darts only
        int g2 = d.head(dart);
        if (part.cls[g2] != part.cls[f]) continue;  // stay inside the class
        std::array<long long, 2> want{pot[f][0] + t.winding[dart][0],
                                      pot[f][1] + t.winding[dart][1]};
        if (!seen[g2]) {
          seen[g2] = 1;
          pot[g2] = want;
          queue.push_back(g2);
        } else if (pot[g2] != want) {
          return true;
        }
      }
    }
  }
  return false;
}

namespace detail {

using Pt = std::pair<long long, long long>;

inline long long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

// Convex hull, counterclockwise, no collinear points kept.
inline std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Pt> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// On the hull boundary, vertices and collinear edge points alike.
inline bool on_hull_boundary(const std::vector<Pt>& hull, const Pt& p) {
  if (hull.size() == 1) return p == hull[0];
  for (size_t i = 0; i < hull.size(); ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) != 0) continue;
    if (std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
        std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second))
      return true;
  }
  return false;
}

}  // namespace detail

// One entry per achieved cohomology class, sorted by (s, t): its members,
// whether it lies on the boundary of the achieved set's convex hull, and how
// many twist-connected components it splits into.
struct PhasePoint {
  long long s = 0, t = 0;
  std::vector<int> members;  // indices into the factor list
  bool extremal = false;
  int components = 0;
};

inline std::vector<PhasePoint> phase_diagram(const TorusGrid& t,
                                             const std::vector<DFactor>& factors) {
  require(!factors.empty(), ErrorKind::NoFactor, "no factors to classify");
  std::map<DFactor, int> index;
  for (size_t i = 0; i < factors.size(); ++i) index[factors[i]] = static_cast<int>(i);

  // union-find over twist moves
  std::vector<int> parent(factors.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::map<std::pair<long long, long long>, std::vector<int>> classes;
  for (size_t i = 0; i < factors.size(); ++i) {
    auto co = cohomology_of(t, factors[i]);
    classes[co].push_back(static_cast<int>(i));
    auto sign = alternating_faces(t.ctx, factors[i]);
    for (int f = 0; f < t.ctx.dual.nv(); ++f) {
      if (sign[f] == 0) continue;
      auto m2 = twist(t.ctx, factors[i], f, sign[f] == 1);
      auto it = index.find(m2);
      require(it != index.end(), ErrorKind::Internal, "twist left the factor list");
      require(cohomology_of(t, m2) == co, ErrorKind::Internal,
              "twist changed the cohomology");
      parent[find(static_cast<int>(i))] = find(it->second);
    }
  }

  std::vector<detail::Pt> pts;
  for (const auto& [co, members] : classes) pts.push_back(co);
  auto hull = detail::convex_hull(pts);

  std::vector<PhasePoint> out;
  for (const auto& [co, members] : classes) {
    PhasePoint p;
    p.s = co.first;
    p.t = co.second;
    p.members = members;
    p.extremal = detail::on_hull_boundary(hull, co);
    std::vector<int> roots;
    for (int i : members) roots.push_back(find(i));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    p.components = static_cast<int>(roots.size());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace latgraph

#endif  // LATGRAPH_TORUS_HPP
