#ifndef LATGRAPH_ORIENTATION_HPP
#define LATGRAPH_ORIENTATION_HPP

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latgraph/multigraph.hpp"
#include "latgraph/poset.hpp"
#include "latgraph/rational.hpp"

namespace latgraph {

// An orientation assigns each edge a direction: 1 = as stored (u->v),
// 0 = reversed. The set under study is always "all orientations with the
// same circulation around every cycle as a reference, agreeing with the
// pinned edges"; we call that set the ensemble of the reference.
using Orientation = std::vector<char>;

inline bool agrees(const Orientation& o, int d) {
  return (o[dart_edge(d)] != 0) == !dart_reversed(d);
}

inline int oriented_dart(const Orientation& o, int e) {
  return o[e] ? dart_fwd(e) : dart_rev(e);
}

inline void require_orientation(const MultiGraph& g, const Orientation& o) {
  require(static_cast<int>(o.size()) == g.ne(), ErrorKind::NotOrientation,
          "orientation must assign every edge");
  for (char c : o)
    require(c == 0 || c == 1, ErrorKind::NotOrientation, "orientation entries must be 0 or 1");
}

inline bool respects_pins(const MultiGraph& g, const Orientation& o) {
  for (int e = 0; e < g.ne(); ++e)
    if (auto p = g.pin(e); p && *p != (o[e] != 0)) return false;
  return true;
}

// Forward edges minus backward edges along a dart walk.
inline long long circulation(const Orientation& o, const std::vector<int>& darts) {
  long long c = 0;
  for (int d : darts) c += agrees(o, d) ? 1 : -1;
  return c;
}

inline std::vector<long long> basis_circulations(const MultiGraph& g, const Orientation& o) {
  std::vector<long long> out;
  for (const auto& cyc : cycle_basis(g)) out.push_back(circulation(o, cyc));
  return out;
}

inline bool is_member(const MultiGraph& g, const Orientation& ref, const Orientation& o) {
  require_orientation(g, ref);
  require_orientation(g, o);
  if (!respects_pins(g, o)) return false;
  return basis_circulations(g, ref) == basis_circulations(g, o);
}

// ---------------------------------------------------------------------------
// Mutual accessibility classes (strongly connected components of the directed
// graph). Any two members of an ensemble induce the same partition; the class
// ids are renumbered by smallest contained vertex for determinism.

struct VertexPartition {
  std::vector<int> cls;                   // per vertex
  int count = 0;
  std::vector<std::vector<int>> members;  // per class, ascending
};

inline VertexPartition accessibility_partition(const MultiGraph& g, const Orientation& o) {
  const int n = g.nv();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), scc_stack;
  std::vector<char> on_stack(n, 0);
  int next_index = 0, comp_count = 0;
  struct Frame {
    int v;
    size_t i;
  };
  std::vector<Frame> frames;
  for (int r = 0; r < n; ++r) {
    if (index[r] != -1) continue;
    index[r] = low[r] = next_index++;
    scc_stack.push_back(r);
    on_stack[r] = 1;
    frames.push_back({r, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.i < g.rotation(v).size()) {
        int e = g.rotation(v)[f.i++];
        int d = g.dart_from(e, v);
        if (!agrees(o, d)) continue;  // only forward darts
        int w = g.head(d);
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});  // invalidates f
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            int w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }

  std::vector<int> smallest(comp_count, n);
  for (int v = 0; v < n; ++v) smallest[comp[v]] = std::min(smallest[comp[v]], v);
  std::vector<int> order(comp_count);
  for (int c = 0; c < comp_count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return smallest[a] < smallest[b]; });
  std::vector<int> renumber(comp_count);
  for (int i = 0; i < comp_count; ++i) renumber[order[i]] = i;

  VertexPartition part;
  part.count = comp_count;
  part.cls.resize(n);
  part.members.resize(comp_count);
  for (int v = 0; v < n; ++v) {
    part.cls[v] = renumber[comp[v]];
    part.members[part.cls[v]].push_back(v);
  }
  return part;
}

// Edges whose endpoints are mutually accessible; such an edge lies on a
// directed cycle, so reversing it alone would change a circulation, and it
// keeps its direction across the whole ensemble.
inline std::vector<char> forced_edges(const MultiGraph& g, const Orientation& o) {
  VertexPartition part = accessibility_partition(g, o);
  std::vector<char> forced(g.ne());
  for (int e = 0; e < g.ne(); ++e)
    forced[e] = part.cls[g.ends(e).u] == part.cls[g.ends(e).v];
  return forced;
}

inline bool class_is_maximal(const MultiGraph& g, const Orientation& o,
                             const VertexPartition& part, int c) {
  for (int e = 0; e < g.ne(); ++e) {
    int d = oriented_dart(o, e);
    if (part.cls[g.tail(d)] == c && part.cls[g.head(d)] != c) return false;
  }
  return true;
}

inline bool class_is_minimal(const MultiGraph& g, const Orientation& o,
                             const VertexPartition& part, int c) {
  for (int e = 0; e < g.ne(); ++e) {
    int d = oriented_dart(o, e);
    if (part.cls[g.head(d)] == c && part.cls[g.tail(d)] != c) return false;
  }
  return true;
}

// A class may be pushed only if it avoids the base vertex and the pinned
// boundary.
inline bool class_is_eligible(const MultiGraph& g, const VertexPartition& part, int c,
                              int v_star) {
  if (part.cls[v_star] == c) return false;
  auto pinned = g.pinned_vertices();
  for (int v : part.members[c])
    if (pinned[v]) return false;
  return true;
}

inline Orientation reverse_class_boundary(const MultiGraph& g, const Orientation& o,
                                          const VertexPartition& part, int c) {
  Orientation s = o;
  for (int e = 0; e < g.ne(); ++e) {
    bool cu = part.cls[g.ends(e).u] == c, cv = part.cls[g.ends(e).v] == c;
    if (cu != cv) s[e] = !s[e];
  }
  return s;
}

// Eligible classes whose boundary edges all point inward (outward), in
// ascending class id. Pushing one down (up) moves to a lattice cover.
inline std::vector<int> mesa_classes(const MultiGraph& g, const Orientation& o,
                                     const VertexPartition& part, int v_star) {
  std::vector<int> out;
  for (int c = 0; c < part.count; ++c)
    if (class_is_eligible(g, part, c, v_star) && class_is_maximal(g, o, part, c))
      out.push_back(c);
  return out;
}

inline std::vector<int> valley_classes(const MultiGraph& g, const Orientation& o,
                                       const VertexPartition& part, int v_star) {
  std::vector<int> out;
  for (int c = 0; c < part.count; ++c)
    if (class_is_eligible(g, part, c, v_star) && class_is_minimal(g, o, part, c))
      out.push_back(c);
  return out;
}

inline Orientation push_down(const MultiGraph& g, const Orientation& o, int v_star, int vertex) {
  VertexPartition part = accessibility_partition(g, o);
  int c = part.cls[vertex];
  require(class_is_eligible(g, part, c, v_star), ErrorKind::ExcludedClass,
          "class of vertex " + std::to_string(vertex) +
              " contains the base vertex or pinned boundary");
  require(class_is_maximal(g, o, part, c), ErrorKind::NotMaximal,
          "class of vertex " + std::to_string(vertex) + " has an outgoing edge");
  return reverse_class_boundary(g, o, part, c);
}

inline Orientation push_up(const MultiGraph& g, const Orientation& o, int v_star, int vertex) {
  VertexPartition part = accessibility_partition(g, o);
  int c = part.cls[vertex];
  require(class_is_eligible(g, part, c, v_star), ErrorKind::ExcludedClass,
          "class of vertex " + std::to_string(vertex) +
              " contains the base vertex or pinned boundary");
  require(class_is_minimal(g, o, part, c), ErrorKind::NotMinimal,
          "class of vertex " + std::to_string(vertex) + " has an incoming edge");
  return reverse_class_boundary(g, o, part, c);
}

// With pinned edges present, the push theory needs the pinned subgraph to be
// connected and to contain the base vertex.
inline void require_boundary(const MultiGraph& g, int v_star) {
  require(0 <= v_star && v_star < g.nv(), ErrorKind::BadInput, "base vertex out of range");
  if (!g.has_pins()) return;
  auto pinned = g.pinned_vertices();
  require(pinned[v_star], ErrorKind::BadInput, "base vertex must lie on the pinned boundary");
  std::vector<char> seen(g.nv(), 0);
  std::vector<int> stack = {v_star};
  seen[v_star] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.rotation(v)) {
      if (!g.pin(e)) continue;
      int w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < g.nv(); ++v)
    require(!pinned[v] || seen[v], ErrorKind::BadInput, "pinned edges must form a connected subgraph");
}

inline Orientation bottom_orientation(const MultiGraph& g, const Orientation& ref, int v_star) {
  require_boundary(g, v_star);
  require(respects_pins(g, ref), ErrorKind::NotOrientation, "reference violates a pinned edge");
  Orientation o = ref;
  while (true) {
    VertexPartition part = accessibility_partition(g, o);
    auto mesas = mesa_classes(g, o, part, v_star);
    if (mesas.empty()) return o;
    o = reverse_class_boundary(g, o, part, mesas.front());
  }
}

inline Orientation top_orientation(const MultiGraph& g, const Orientation& ref, int v_star) {
  require_boundary(g, v_star);
  require(respects_pins(g, ref), ErrorKind::NotOrientation, "reference violates a pinned edge");
  Orientation o = ref;
  while (true) {
    VertexPartition part = accessibility_partition(g, o);
    auto valleys = valley_classes(g, o, part, v_star);
    if (valleys.empty()) return o;
    o = reverse_class_boundary(g, o, part, valleys.front());
  }
}

// ---------------------------------------------------------------------------
// Ensemble enumeration. Both strategies return the ascending lexicographic
// list (0 sorts before 1).

inline int max_enumeration_edges() {
  if (const char* s = std::getenv("ORIENT_LATTICE_MAX_EDGES")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    require(end != s && *end == '\0' && v > 0, ErrorKind::BadInput,
            "ORIENT_LATTICE_MAX_EDGES must be a positive integer");
    return static_cast<int>(v);
  }
  return 24;
}

// Direct search: assign the unpinned edges in id order, pruning with the
// achievable circulation bounds of each fundamental cycle.
inline std::vector<Orientation> enumerate_orientations(const MultiGraph& g,
                                                       const Orientation& ref) {
  require_orientation(g, ref);
  require(respects_pins(g, ref), ErrorKind::NotOrientation, "reference violates a pinned edge");
  int free_edges = 0;
  for (int e = 0; e < g.ne(); ++e)
    if (!g.pin(e)) ++free_edges;
  require(free_edges <= max_enumeration_edges(), ErrorKind::TooLarge,
          std::to_string(free_edges) + " unpinned edges exceed the enumeration limit");

  auto basis = cycle_basis(g);
  const int nb = static_cast<int>(basis.size());
  std::vector<long long> target(nb), partial(nb, 0);
  std::vector<int> remaining(nb);
  std::vector<std::vector<std::pair<int, int>>> touches(g.ne());  // edge -> (cycle, sign)
  for (int i = 0; i < nb; ++i) {
    target[i] = circulation(ref, basis[i]);
    remaining[i] = static_cast<int>(basis[i].size());
    for (int d : basis[i]) touches[dart_edge(d)].emplace_back(i, dart_reversed(d) ? -1 : 1);
  }

  std::vector<Orientation> out;
  Orientation o(g.ne(), 0);
  auto rec = [&](auto&& self, int e) -> void {
    if (e == g.ne()) {
      out.push_back(o);
      return;
    }
    auto p = g.pin(e);
    for (char dir = 0; dir <= 1; ++dir) {
      if (p && *p != (dir != 0)) continue;
      o[e] = dir;
      bool ok = true;
      for (auto [i, sign] : touches[e]) {
        partial[i] += sign * (2 * dir - 1);
        remaining[i] -= 1;
      }
      for (auto [i, sign] : touches[e])
        if (std::llabs(target[i] - partial[i]) > remaining[i]) ok = false;
      if (ok) self(self, e + 1);
      for (auto [i, sign] : touches[e]) {
        partial[i] -= sign * (2 * dir - 1);
        remaining[i] += 1;
      }
    }
  };
  rec(rec, 0);
  return out;
}

// Push search: saturate upward from the bottom element.
inline std::vector<Orientation> enumerate_orientations_push(const MultiGraph& g,
                                                            const Orientation& ref, int v_star) {
  Orientation bot = bottom_orientation(g, ref, v_star);
  std::set<Orientation> seen = {bot};
  std::vector<Orientation> queue = {bot};
  while (!queue.empty()) {
    Orientation o = std::move(queue.back());
    queue.pop_back();
    VertexPartition part = accessibility_partition(g, o);
    for (int c : valley_classes(g, o, part, v_star)) {
      Orientation s = reverse_class_boundary(g, o, part, c);
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Height differences. For members a, b of one ensemble the difference
// H_a - H_b telescopes to (indicator of a) - (indicator of b) along any walk,
// so it is integral and needs no edge bias. All order operations reduce to
// it.

inline std::vector<long long> height_difference(const MultiGraph& g, const Orientation& a,
                                                const Orientation& b, int v_star) {
  std::vector<long long> diff(g.nv(), 0);
  std::vector<char> done(g.nv(), 0);
  done[v_star] = 1;
  std::vector<int> queue = {v_star};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : g.rotation(v)) {
      int d = g.dart_from(e, v);
      int w = g.head(d);
      long long step = (agrees(a, d) ? 1 : 0) - (agrees(b, d) ? 1 : 0);
      if (!done[w]) {
        done[w] = 1;
        diff[w] = diff[v] + step;
        queue.push_back(w);
      } else {
        require(diff[w] == diff[v] + step, ErrorKind::CirculationMismatch,
                "orientations do not share circulations");
      }
    }
  }
  return diff;
}

inline bool orientation_leq(const MultiGraph& g, const Orientation& a, const Orientation& b,
                            int v_star) {
  for (long long d : height_difference(g, a, b, v_star))
    if (d > 0) return false;
  return true;
}

// Meet and join carry pointwise min/max of height functions back to an
// orientation: across edge (u,v), the direction indicator changes from a's
// by the increment of the capped difference.
namespace detail {
inline Orientation extremum_orientation(const MultiGraph& g, const Orientation& a,
                                        const Orientation& b, int v_star, bool take_min) {
  std::vector<long long> d = height_difference(g, b, a, v_star);  // H_b - H_a
  for (auto& x : d) x = take_min ? std::min(0LL, x) : std::max(0LL, x);
  Orientation o(g.ne());
  for (int e = 0; e < g.ne(); ++e) {
    long long dir = (a[e] ? 1 : 0) + d[g.ends(e).v] - d[g.ends(e).u];
    require(dir == 0 || dir == 1, ErrorKind::Internal, "extremum is not an orientation");
    o[e] = static_cast<char>(dir);
  }
  return o;
}
}  // namespace detail

inline Orientation meet_orientations(const MultiGraph& g, const Orientation& a,
                                     const Orientation& b, int v_star) {
  return detail::extremum_orientation(g, a, b, v_star, true);
}

inline Orientation join_orientations(const MultiGraph& g, const Orientation& a,
                                     const Orientation& b, int v_star) {
  return detail::extremum_orientation(g, a, b, v_star, false);
}

// ---------------------------------------------------------------------------
// Edge bias and height functions. A bias assigns every dart a probability-
// like weight with bias(d) + bias(-d) = 1 whose sum around every cycle C is
// (|C| + circulation(C))/2. The canonical choice is the ensemble average of
// the direction indicator; with it, H spreads members around the base vertex
// so that pointwise comparison is the lattice order.

using Bias = std::vector<Rat>;  // indexed by dart

inline Bias average_bias(const MultiGraph& g, const std::vector<Orientation>& members) {
  require(!members.empty(), ErrorKind::BadInput, "ensemble is empty");
  Bias bias(2 * g.ne());
  for (int e = 0; e < g.ne(); ++e) {
    long long fwd = 0;
    for (const auto& o : members) fwd += o[e];
    bias[dart_fwd(e)] = Rat(fwd, static_cast<long long>(members.size()));
    bias[dart_rev(e)] = Rat(1) - bias[dart_fwd(e)];
  }
  return bias;
}

inline void validate_bias(const MultiGraph& g, const Bias& bias, const Orientation& ref) {
  require(static_cast<int>(bias.size()) == 2 * g.ne(), ErrorKind::BadInput,
          "bias must assign every dart");
  for (int e = 0; e < g.ne(); ++e) {
    const Rat& f = bias[dart_fwd(e)];
    require(f >= Rat(0) && f <= Rat(1), ErrorKind::BadInput, "bias out of [0,1]");
    require(f + bias[dart_rev(e)] == Rat(1), ErrorKind::BadInput,
            "bias of opposite darts must sum to 1");
  }
  for (const auto& cyc : cycle_basis(g)) {
    Rat sum(0);
    for (int d : cyc) sum += bias[d];
    require(sum == Rat(static_cast<long long>(cyc.size()) + circulation(ref, cyc), 2),
            ErrorKind::BadInput, "bias has wrong sum around a cycle");
  }
}

// H(v_star) = 0 and, along any dart d, H increases by [d forward] - bias(d).
inline std::vector<Rat> height_function(const MultiGraph& g, const Bias& bias,
                                        const Orientation& o, int v_star) {
  require_orientation(g, o);
  std::vector<Rat> h(g.nv(), Rat(0));
  std::vector<char> done(g.nv(), 0);
  done[v_star] = 1;
  std::vector<int> queue = {v_star};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : g.rotation(v)) {
      int d = g.dart_from(e, v);
      int w = g.head(d);
      Rat step = Rat(agrees(o, d) ? 1 : 0) - bias[d];
      if (!done[w]) {
        done[w] = 1;
        h[w] = h[v] + step;
        queue.push_back(w);
      } else {
        require(h[w] == h[v] + step, ErrorKind::CirculationMismatch,
                "orientation circulations do not match the bias");
      }
    }
  }
  return h;
}

// Inverse of height_function: each edge must change height by 1 - bias
// (taken forward) or -bias (taken backward).
inline Orientation orientation_of_height(const MultiGraph& g, const Bias& bias,
                                         const std::vector<Rat>& h) {
  require(static_cast<int>(h.size()) == g.nv(), ErrorKind::NotAHeight,
          "height must assign every vertex");
  Orientation o(g.ne());
  for (int e = 0; e < g.ne(); ++e) {
    Rat diff = h[g.ends(e).v] - h[g.ends(e).u];
    const Rat& b = bias[dart_fwd(e)];
    if (diff == Rat(1) - b)
      o[e] = 1;
    else if (diff == -b)
      o[e] = 0;
    else
      fail(ErrorKind::NotAHeight,
           "height step across edge " + std::to_string(e) + " matches neither direction");
  }
  require(respects_pins(g, o), ErrorKind::NotAHeight, "height violates a pinned edge");
  return o;
}

// ---------------------------------------------------------------------------
// Cover structure of an ensemble over its sorted member list.

struct Hasse {
  std::vector<std::pair<int, int>> covers;  // (upper, lower) member indices
  std::vector<int> rank;                    // longest chain from the bottom
  int bottom = -1, top = -1;
  bool graded = false;
};

inline int member_index(const std::vector<Orientation>& members, const Orientation& o) {
  auto it = std::lower_bound(members.begin(), members.end(), o);
  require(it != members.end() && *it == o, ErrorKind::Internal,
          "orientation missing from member list");
  return static_cast<int>(it - members.begin());
}

inline Hasse hasse_diagram(const MultiGraph& g, const std::vector<Orientation>& members,
                           int v_star) {
  require_boundary(g, v_star);
  require(!members.empty(), ErrorKind::BadInput, "ensemble is empty");
  Hasse h;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    VertexPartition part = accessibility_partition(g, members[i]);
    for (int c : mesa_classes(g, members[i], part, v_star)) {
      Orientation s = reverse_class_boundary(g, members[i], part, c);
      h.covers.emplace_back(i, member_index(members, s));
    }
  }
  std::vector<char> has_below(members.size(), 0), has_above(members.size(), 0);
  std::vector<std::pair<int, int>> upward;  // (lower, upper)
  for (auto [hi, lo] : h.covers) {
    has_below[hi] = 1;
    has_above[lo] = 1;
    upward.emplace_back(lo, hi);
  }
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    if (!has_below[i]) {
      require(h.bottom == -1, ErrorKind::Internal, "two minimal members");
      h.bottom = i;
    }
    if (!has_above[i]) {
      require(h.top == -1, ErrorKind::Internal, "two maximal members");
      h.top = i;
    }
  }
  h.rank = longest_chain_ranks(static_cast<int>(members.size()), upward);
  h.graded = is_graded(static_cast<int>(members.size()), upward);
  return h;
}

// Undirected cover-graph distance (minimum number of pushes).
inline int cover_distance(const Hasse& h, int from, int to) {
  int n = static_cast<int>(h.rank.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [hi, lo] : h.covers) {
    adj[hi].push_back(lo);
    adj[lo].push_back(hi);
  }
  std::vector<int> dist(n, -1);
  dist[from] = 0;
  std::vector<int> queue = {from};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    if (v == to) return dist[v];
    for (int w : adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  fail(ErrorKind::Internal, "cover graph is disconnected");
}

// The member order as an abstract poset (index i below j when every height
// of i is at most that of j).
inline Poset lattice_order_poset(const MultiGraph& g, const std::vector<Orientation>& members,
                                 int v_star) {
  std::vector<std::pair<int, int>> below;
  const int n = static_cast<int>(members.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && orientation_leq(g, members[i], members[j], v_star)) below.emplace_back(i, j);
  return Poset::from_relations(n, below);
}

// Meet and join tables over member indices.
struct LatticeTables {
  std::vector<std::vector<int>> meet, join;
};

inline LatticeTables lattice_tables(const MultiGraph& g, const std::vector<Orientation>& members,
                                    int v_star) {
  const int n = static_cast<int>(members.size());
  LatticeTables t;
  t.meet.assign(n, std::vector<int>(n));
  t.join.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int m = member_index(members, meet_orientations(g, members[i], members[j], v_star));
      int o = member_index(members, join_orientations(g, members[i], members[j], v_star));
      t.meet[i][j] = t.meet[j][i] = m;
      t.join[i][j] = t.join[j][i] = o;
    }
  return t;
}

// ---------------------------------------------------------------------------
// Join-irreducible structure.

// Directly from the cover relation: elements with exactly one lower cover,
// under the induced order.
struct Irreducibles {
  std::vector<int> member;  // lattice index per poset element
  Poset poset;
};

inline Irreducibles join_irreducibles(const std::vector<Orientation>& members, const Hasse& h) {
  const int n = static_cast<int>(members.size());
  std::vector<int> lower_covers(n, 0);
  for (auto [hi, lo] : h.covers) lower_covers[hi]++;
  Irreducibles irr;
  for (int i = 0; i < n; ++i)
    if (lower_covers[i] == 1) irr.member.push_back(i);

  // Order by reachability through covers.
  std::vector<std::vector<int>> up(n);
  for (auto [hi, lo] : h.covers) up[lo].push_back(hi);
  std::vector<std::pair<int, int>> below;
  for (size_t a = 0; a < irr.member.size(); ++a) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {irr.member[a]};
    seen[irr.member[a]] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : up[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    for (size_t b = 0; b < irr.member.size(); ++b)
      if (b != a && seen[irr.member[b]])
        below.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  irr.poset = Poset::from_relations(static_cast<int>(irr.member.size()), below);
  return irr;
}

// Level description of the same poset: one element (v, i) per vertex v and
// level 1 <= i <= max H(v) - min H(v), with (w, j) below (v, i) when v, w are
// adjacent and the level values straddle within distance 1. Assumes every
// accessibility class is a single vertex, so that heights move one vertex at
// a time.
struct LevelIrreducibles {
  std::vector<std::pair<int, int>> elements;  // (vertex, level), sorted
  Poset poset;
};

inline LevelIrreducibles level_irreducibles(const MultiGraph& g, const Bias& bias,
                                            const std::vector<Orientation>& members,
                                            int v_star) {
  require(!members.empty(), ErrorKind::BadInput, "ensemble is empty");
  {
    VertexPartition part = accessibility_partition(g, members.front());
    require(part.count == g.nv(), ErrorKind::BadInput,
            "level description needs singleton accessibility classes");
  }
  std::vector<Rat> lo(g.nv()), hi(g.nv());
  bool first = true;
  for (const auto& o : members) {
    auto h = height_function(g, bias, o, v_star);
    for (int v = 0; v < g.nv(); ++v) {
      if (first || h[v] < lo[v]) lo[v] = h[v];
      if (first || h[v] > hi[v]) hi[v] = h[v];
    }
    first = false;
  }
  LevelIrreducibles out;
  std::vector<int> depth(g.nv());
  std::vector<std::vector<int>> id(g.nv());
  for (int v = 0; v < g.nv(); ++v) {
    depth[v] = static_cast<int>(to_integer(hi[v] - lo[v]));
    id[v].assign(depth[v] + 1, -1);
    for (int i = 1; i <= depth[v]; ++i) {
      id[v][i] = static_cast<int>(out.elements.size());
      out.elements.emplace_back(v, i);
    }
  }
  std::vector<std::pair<int, int>> below;
  for (int e = 0; e < g.ne(); ++e) {
    auto [u, v] = g.ends(e);
    for (int i = 1; i <= depth[u]; ++i)
      for (int j = 1; j <= depth[v]; ++j) {
        Rat x = (lo[u] + i) - (lo[v] + j);
        if (Rat(0) < x && x < Rat(1)) below.emplace_back(id[v][j], id[u][i]);
        if (Rat(0) < -x && -x < Rat(1)) below.emplace_back(id[u][i], id[v][j]);
      }
  }
  out.poset = Poset::from_relations(static_cast<int>(out.elements.size()), below);
  return out;
}

// ---------------------------------------------------------------------------
// Affine rank. Routing a unit of demand at every vertex except the base
// through a spanning tree gives integer edge coefficients such that each
// single-vertex push changes the weighted direction sum by exactly -1; with
// the constant calibrated at the bottom, the affine form reads off the rank.
// Meaningful when every accessibility class is a single vertex.

struct AffineRank {
  std::vector<long long> reversed_coeff;  // added when the edge runs against storage
  long long constant = 0;
};

inline long long affine_rank_value(const AffineRank& a, const Orientation& o) {
  long long sum = a.constant;
  for (size_t e = 0; e < o.size(); ++e)
    if (!o[e]) sum += a.reversed_coeff[e];
  return sum;
}

inline AffineRank rank_affine(const MultiGraph& g, int v_star, const Orientation& bottom) {
  SpanningTree t = spanning_tree(g, v_star);
  std::vector<int> order(g.nv());
  for (int v = 0; v < g.nv(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return t.depth[a] > t.depth[b]; });
  std::vector<long long> subtree(g.nv(), 1);
  for (int v : order)
    if (t.parent[v] != -1) subtree[t.parent[v]] += subtree[v];

  AffineRank a;
  a.reversed_coeff.assign(g.ne(), 0);
  for (int v = 0; v < g.nv(); ++v) {
    int e = t.parent_edge[v];
    if (e == -1) continue;
    // v heads the far side of the cut; demand |subtree(v)| must flow out
    // through e toward the base.
    a.reversed_coeff[e] = g.ends(e).u == v ? subtree[v] : -subtree[v];
  }
  a.constant = 0;
  a.constant = -affine_rank_value(a, bottom);
  return a;
}

}  // namespace latgraph

#endif  // LATGRAPH_ORIENTATION_HPP
