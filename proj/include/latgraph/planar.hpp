#ifndef LATGRAPH_PLANAR_HPP
#define LATGRAPH_PLANAR_HPP

#include <vector>

#include "latgraph/multigraph.hpp"

namespace latgraph {

// Faces of the embedding given by the rotation system. With clockwise
// rotations, the rule "leave along the clockwise successor of the arrival
// edge" traverses every face counterclockwise as seen on the sphere; in a
// plane drawing the unbounded face therefore reads clockwise. Every dart lies
// on exactly one face boundary: the face to its left.
struct Faces {
  std::vector<std::vector<int>> boundary;  // ccw dart sequences, canonical start
  std::vector<int> face_of;                // per dart: the face on its left
  int euler = 0;                           // nv - ne + nf
};

inline int next_face_dart(const MultiGraph& g, int d) {
  int v = g.head(d);
  int e = g.clockwise_next(v, dart_edge(d));
  return g.dart_from(e, v);
}

inline Faces trace_faces_surface(const MultiGraph& g) {
  Faces f;
  f.face_of.assign(2 * g.ne(), -1);
  for (int d0 = 0; d0 < 2 * g.ne(); ++d0) {
    if (f.face_of[d0] != -1) continue;
    int id = static_cast<int>(f.boundary.size());
    std::vector<int> cyc;
    int d = d0;
    do {
      f.face_of[d] = id;
      cyc.push_back(d);
      d = next_face_dart(g, d);
    } while (d != d0);
    f.boundary.push_back(std::move(cyc));
  }
  f.euler = g.nv() - g.ne() + static_cast<int>(f.boundary.size());
  return f;
}

// Sphere-only variant; lattice constructions in this library assume genus 0.
inline Faces trace_faces(const MultiGraph& g) {
  Faces f = trace_faces_surface(g);
  require(f.euler == 2, ErrorKind::NotSphere,
          "rotation system has Euler characteristic " + std::to_string(f.euler));
  return f;
}

inline int num_faces(const Faces& f) { return static_cast<int>(f.boundary.size()); }
inline int left_face(const Faces& f, int d) { return f.face_of[d]; }
inline int right_face(const Faces& f, int d) { return f.face_of[dart_opposite(d)]; }

// Dual graph: one vertex per face, one edge per primal edge with the same id.
// Dual edge e is stored (left_face(fwd e), right_face(fwd e)); the dual
// rotation at a face is the reverse of its ccw boundary edge order, so the
// double dual reproduces the primal rotation. A bridge would yield a dual
// self-loop and is rejected by the MultiGraph invariant.
inline MultiGraph dual_graph(const MultiGraph& g, const Faces& f) {
  std::vector<EdgeEnds> dedges(g.ne());
  for (int e = 0; e < g.ne(); ++e)
    dedges[e] = {left_face(f, dart_fwd(e)), right_face(f, dart_fwd(e))};
  std::vector<std::vector<int>> drot(num_faces(f));
  for (int fi = 0; fi < num_faces(f); ++fi) {
    const auto& cyc = f.boundary[fi];
    for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) drot[fi].push_back(dart_edge(*it));
  }
  return MultiGraph::build(num_faces(f), std::move(dedges), std::move(drot));
}

// The dual dart crossing primal edge e from right_face(d) to left_face(d);
// the crossing keeps tail(d) on the mover's left. Dual edges are stored
// (L, R) of the forward primal dart, so this is the reversed dual dart for a
// forward primal dart and vice versa.
inline int dual_dart_crossing(int primal_dart) {
  int e = dart_edge(primal_dart);
  return dart_reversed(primal_dart) ? dart_fwd(e) : dart_rev(e);
}

}  // namespace latgraph

#endif  // LATGRAPH_PLANAR_HPP
