// Command-line surface: generate instances, enumerate their ensembles, and
// export lattices as JSON or DOT. Exit codes: 0 success, 1 failed
// verification, 2 usage error, 3 instance error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latgraph/json_io.hpp"

using namespace latgraph;

namespace {

struct UsageError {
  std::string msg;
};

struct VerifyFailure {};

struct SourceOpts {
  std::string input;
  std::string family;
  int n = -1, k = -1, a = -1, b = -1, c = -1, w = -1, h = -1;
};

void add_family_flags(CLI::App* sub, SourceOpts& o) {
  sub->add_option("--family", o.family, "instance family")
      ->check(CLI::IsMember({"cycle", "path", "grid_pinned", "grid", "hexagon", "aztec",
                             "torus_grid", "torus", "kn_outer", "kn", "square_with_chord",
                             "chord"}));
  sub->add_option("--n", o.n, "size parameter");
  sub->add_option("--k", o.k, "cycle circulation parameter");
  sub->add_option("--a", o.a, "hexagon side a");
  sub->add_option("--b", o.b, "hexagon side b");
  sub->add_option("--c", o.c, "hexagon side c");
  sub->add_option("--width", o.w, "torus width");
  sub->add_option("--height", o.h, "torus height");
}

void add_input(CLI::App* sub, SourceOpts& o) {
  sub->add_option("input", o.input, "instance document path, - for stdin");
  add_family_flags(sub, o);
}

Instance make_from_family(const SourceOpts& o) {
  auto needs = [](bool ok, const char* msg) {
    if (!ok) throw UsageError{msg};
  };
  std::string f = o.family;
  if (f == "grid") f = "grid_pinned";
  if (f == "torus") f = "torus_grid";
  if (f == "kn") f = "kn_outer";
  if (f == "chord") f = "square_with_chord";

  if (f == "cycle") {
    needs(o.n >= 0 && o.k >= 0, "family cycle needs --n and --k");
    return cycle_instance(o.n, o.k);
  }
  if (f == "path") {
    needs(o.n >= 0, "family path needs --n");
    return path_instance(o.n);
  }
  if (f == "grid_pinned") {
    needs(o.n >= 0, "family grid_pinned needs --n");
    return grid_pinned_instance(o.n);
  }
  if (f == "hexagon") {
    needs(o.a >= 0 && o.b >= 0 && o.c >= 0, "family hexagon needs --a --b --c");
    return hexagon_instance(o.a, o.b, o.c);
  }
  if (f == "aztec") {
    needs(o.n >= 0, "family aztec needs --n");
    return aztec_instance(o.n);
  }
  if (f == "torus_grid") {
    int w = o.w >= 0 ? o.w : o.n, h = o.h >= 0 ? o.h : o.n;
    needs(w >= 0 && h >= 0, "family torus_grid needs --width and --height (or --n)");
    return torus_instance(w, h);
  }
  if (f == "kn_outer") {
    needs(o.n >= 0, "family kn_outer needs --n");
    return kn_instance(o.n);
  }
  if (f == "square_with_chord") return square_with_chord_instance();
  throw UsageError{"give a --family"};
}

Instance resolve_instance(const SourceOpts& o) {
  if (!o.family.empty()) {
    if (!o.input.empty()) throw UsageError{"give either an input document or --family, not both"};
    return make_from_family(o);
  }
  std::string path = o.input.empty() ? "-" : o.input;
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
    text << in.rdbuf();
  }
  return parse_instance(text.str());
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- subcommands -----------------------------------------------------------

void cmd_enumerate(const Instance& ins) {
  if (ins.reference) {
    auto members = enumerate_orientations(ins.g, *ins.reference);
    json arr = json::array();
    for (const auto& m : members) arr.push_back(orientation_to_json(ins.g, m));
    print_json({{"kind", "orientations"}, {"count", members.size()}, {"members", arr}});
    return;
  }
  if (ins.degrees) {
    auto factors = enumerate_dfactors(ins.g, *ins.degrees);
    json arr = json::array();
    for (const auto& m : factors) arr.push_back(edge_set_to_json(m));
    print_json({{"kind", "factors"}, {"count", factors.size()}, {"members", arr}});
    return;
  }
  fail(ErrorKind::BadInput, "instance declares no ensemble: add a manifest reference or degrees");
}

DualContext dual_context_of(const Instance& ins) {
  if (ins.region) return make_dual_context(region_graph(*ins.region));
  return make_dual_context(ins.g);
}

void cmd_hasse(const Instance& ins, const std::string& format) {
  require(!ins.identify.has_value(), ErrorKind::NotSphere,
          "the lattice ordering needs a spherical drawing; torus instances have none");
  Hasse h;
  if (ins.reference) {
    require(ins.v_star >= 0, ErrorKind::BadInput, "manifest must name v_star");
    auto members = enumerate_orientations(ins.g, *ins.reference);
    h = hasse_diagram(ins.g, members, ins.v_star);
  } else if (ins.degrees) {
    DualContext ctx = dual_context_of(ins);
    int fs = ins.f_star >= 0 ? ins.f_star : outer_face(ctx.faces);
    h = dfactor_lattice(ctx, *ins.degrees, fs).hasse;
  } else {
    fail(ErrorKind::BadInput, "instance declares no ensemble: add a manifest reference or degrees");
  }
  if (format == "dot")
    std::cout << hasse_to_dot(h);
  else
    print_json(hasse_to_json(h));
}

void cmd_heights(const Instance& ins) {
  if (ins.reference) {
    require(ins.v_star >= 0, ErrorKind::BadInput, "manifest must name v_star");
    auto members = enumerate_orientations(ins.g, *ins.reference);
    Bias bias = ins.bias ? *ins.bias : average_bias(ins.g, members);
    json arr = json::array();
    for (const auto& m : members)
      arr.push_back(heights_to_json(height_function(ins.g, bias, m, ins.v_star)));
    print_json({{"kind", "heights"}, {"count", members.size()}, {"members", arr}});
    return;
  }
  if (ins.degrees && !ins.identify) {
    DualContext ctx = dual_context_of(ins);
    int fs = ins.f_star >= 0 ? ins.f_star : outer_face(ctx.faces);
    DFactorLattice lat = dfactor_lattice(ctx, *ins.degrees, fs);
    const DFactor& ref = lat.members[lat.hasse.bottom];
    json arr = json::array();
    for (const auto& m : lat.members) {
      auto fh = face_heights(ctx, m, ref, fs);
      json one = json::object();
      for (size_t f = 0; f < fh.size(); ++f) one[std::to_string(f)] = fh[f];
      arr.push_back(std::move(one));
    }
    print_json({{"kind", "face_heights"},
                {"count", lat.members.size()},
                {"reference", lat.hasse.bottom},
                {"members", arr}});
    return;
  }
  fail(ErrorKind::BadInput, "heights need an orientation ensemble or a plane factor instance");
}

void cmd_asm(const Instance& ins) {
  require(ins.family == "grid_pinned" && ins.reference, ErrorKind::BadInput,
          "alternating sign matrices need a grid_pinned instance");
  int n = ins.params.value("n", -1);
  require(n >= 1, ErrorKind::BadInput, "manifest params must record n");
  GridPinnedFamily fam = grid_pinned_family(n);
  require(jsondetail::same_graph(fam.g, ins.g), ErrorKind::BadInput,
          "stored graph is not the pinned grid of the declared size");
  auto members = enumerate_orientations(ins.g, *ins.reference);
  json arr = json::array();
  for (const auto& m : members) arr.push_back(matrix_of_orientation(fam, m));
  print_json({{"kind", "asm"}, {"n", n}, {"count", members.size()}, {"members", arr}});
}

void cmd_tilings(const Instance& ins) {
  require(ins.region && ins.degrees, ErrorKind::BadInput, "tilings need a region instance");
  auto factors = enumerate_dfactors(ins.g, *ins.degrees);
  json arr = json::array();
  for (const auto& m : factors) arr.push_back(edge_set_to_json(m));
  print_json({{"kind", "tilings"}, {"count", factors.size()}, {"members", arr}});
}

void cmd_phase(const Instance& ins) {
  require(ins.identify.has_value(), ErrorKind::BadInput, "phase diagrams need a torus instance");
  TorusGrid t = torus_grid(ins.identify->first, ins.identify->second);
  DegreeSpec deg = ins.degrees ? *ins.degrees : DegreeSpec(ins.g.nv(), 1);
  auto factors = enumerate_dfactors(t.ctx.primal, deg);
  json arr = json::array();
  for (const PhasePoint& p : phase_diagram(t, factors))
    arr.push_back({{"s", p.s},
                   {"t", p.t},
                   {"count", p.members.size()},
                   {"extremal", p.extremal},
                   {"components", p.components}});
  print_json(arr);
}

json angle_poset_to_json(const AnglePoset& ap) {
  json elems = json::array();
  for (const Angle& a : ap.elements)
    elems.push_back({{"v", a.v}, {"e", a.e}, {"e2", a.e2}, {"f", a.f}});
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : poset_covers(ap.poset)) covers.emplace_back(hi, lo);
  return json{{"elements", elems}, {"covers", covers_to_json(covers)}};
}

void cmd_trees(const Instance& ins, const std::string& format) {
  require(ins.v_star >= 0, ErrorKind::BadInput, "manifest must name v_star");
  if (ins.f_star >= 0 && ins.family != "kn_outer") {
    TreeContext tc = make_tree_context(ins.g, ins.v_star, ins.f_star);
    TreeLattice L = tree_lattice(tc);
    if (format == "dot") {
      std::cout << hasse_to_dot(L.matchings.hasse);
      return;
    }
    json jt = json::array();
    for (const auto& t : L.trees) jt.push_back(edge_set_to_json(t));
    json ap;
    try {
      ap = angle_poset_to_json(angle_poset(tc));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotOuterHamiltonian) throw;
      ap = nullptr;
    }
    print_json({{"kind", "trees"},
                {"count", L.trees.size()},
                {"trees", jt},
                {"hasse", hasse_to_json(L.matchings.hasse)},
                {"angle_poset", ap}});
    return;
  }

  SwingPoset sp = swing_poset_xing(ins.g, ins.v_star, ins.hull);
  if (format == "dot") {
    std::cout << dot_of_covers(sp.rank, sp.covers);
    return;
  }
  const int n = static_cast<int>(sp.trees.size());
  std::vector<char> has_lower(n, 0), has_upper(n, 0);
  for (auto [u, l] : sp.covers) has_lower[u] = has_upper[l] = 1;
  int bottom = -1, top = -1;
  for (int i = 0; i < n; ++i) {
    if (!has_lower[i]) bottom = bottom == -1 ? i : -2;
    if (!has_upper[i]) top = top == -1 ? i : -2;
  }
  json jt = json::array();
  for (const auto& t : sp.trees) jt.push_back(edge_set_to_json(t));
  print_json({{"kind", "trees"},
              {"count", n},
              {"trees", jt},
              {"hasse",
               {{"size", n},
                {"bottom", bottom < 0 ? -1 : bottom},
                {"top", top < 0 ? -1 : top},
                {"graded", sp.graded},
                {"rank", sp.rank},
                {"covers", covers_to_json(sp.covers)}}},
              {"angle_poset", nullptr}});
}

// --- verify ----------------------------------------------------------------

struct Verifier {
  int checks = 0;

  void ok(const std::string& name) {
    ++checks;
    std::cout << "ok: " << name << "\n";
  }
  [[noreturn]] void failed(const std::string& name, const std::string& detail) {
    std::cout << "fail: " << name << ": " << detail << "\n";
    throw VerifyFailure{};
  }
  void check(bool cond, const std::string& name, const std::string& detail) {
    if (!cond) failed(name, detail);
    ok(name);
  }

  // Runs a named step whose internal contract violations count as failures.
  template <typename F>
  void step(const std::string& name, F&& f) {
    try {
      f();
    } catch (const VerifyFailure&) {
      throw;
    } catch (const Error& e) {
      failed(name, e.what());
    }
    ok(name);
  }
};

void verify_orientation_ensemble(Verifier& v, const Instance& ins) {
  std::vector<Orientation> members;
  v.step("members enumerate within the edge cap",
         [&] { members = enumerate_orientations(ins.g, *ins.reference); });
  v.check(std::is_sorted(members.begin(), members.end()) &&
              std::adjacent_find(members.begin(), members.end()) == members.end(),
          "members are canonically sorted", "duplicate or misplaced member");

  if (ins.v_star >= 0) {
    auto pushed = enumerate_orientations_push(ins.g, *ins.reference, ins.v_star);
    if (pushed != members) {
      std::set<Orientation> a(members.begin(), members.end());
      for (const auto& m : pushed)
        if (!a.count(m))
          v.failed("filter and push enumerations agree",
                   "push reached a non-member " + orientation_to_json(ins.g, m).dump());
      std::set<Orientation> b(pushed.begin(), pushed.end());
      for (const auto& m : members)
        if (!b.count(m))
          v.failed("filter and push enumerations agree",
                   "push misses " + orientation_to_json(ins.g, m).dump());
    }
    v.ok("filter and push enumerations agree");

    Hasse h = hasse_diagram(ins.g, members, ins.v_star);
    Poset order = lattice_order_poset(ins.g, members, ins.v_star);
    std::set<std::pair<int, int>> push_covers(h.covers.begin(), h.covers.end());
    std::set<std::pair<int, int>> order_covers;
    for (auto [lo, hi] : poset_covers(order)) order_covers.insert({hi, lo});
    if (push_covers != order_covers)
      v.failed("push moves are exactly the covers", "cover sets differ");
    v.ok("push moves are exactly the covers");

    const int n = static_cast<int>(members.size());
    for (int i = 0; i < n; ++i)
      if (!order.leq(h.bottom, i) || !order.leq(i, h.top))
        v.failed("bottom and top bound every member", "member " + std::to_string(i));
    v.ok("bottom and top bound every member");

    LatticeTables t = lattice_tables(ins.g, members, ins.v_star);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (t.meet[a][t.join[b][c]] != t.join[t.meet[a][b]][t.meet[a][c]] ||
              t.join[a][t.meet[b][c]] != t.meet[t.join[a][b]][t.join[a][c]])
            v.failed("meet and join distribute",
                     "triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                         std::to_string(c) + ")");
        }
    v.ok("meet and join distribute");

    Irreducibles irr = join_irreducibles(members, h);
    v.check(count_ideals(irr.poset) == static_cast<long long>(n),
            "join-irreducible ideals count the members",
            std::to_string(count_ideals(irr.poset)) + " ideals for " + std::to_string(n) +
                " members");
  }

  if (ins.bias) {
    v.step("bias is internally consistent",
           [&] { validate_bias(ins.g, *ins.bias, *ins.reference); });
    // Cycle and path biases are the exact ensemble averages; the pinned
    // grid's conventional uniform 1/2 is a valid bias but not the average,
    // so it is only validated, not compared.
    if (ins.family == "cycle" || ins.family == "path") {
      Bias avg = average_bias(ins.g, members);
      for (int e = 0; e < ins.g.ne(); ++e)
        if (avg[dart_fwd(e)] != (*ins.bias)[dart_fwd(e)])
          v.failed("bias equals the enumeration average",
                   "edge " + std::to_string(e) + ": registered " +
                       to_string((*ins.bias)[dart_fwd(e)]) + ", average " +
                       to_string(avg[dart_fwd(e)]));
      v.ok("bias equals the enumeration average");
    }
  }

  if (ins.g.has_pins()) {
    for (size_t i = 0; i < members.size(); ++i)
      if (!respects_pins(ins.g, members[i]))
        v.failed("every member respects the pins", "member " + std::to_string(i));
    v.ok("every member respects the pins");
  }

  if (ins.family == "grid_pinned") {
    int n = ins.params.value("n", -1);
    GridPinnedFamily fam = grid_pinned_family(n);
    for (size_t i = 0; i < members.size(); ++i) {
      auto mat = matrix_of_orientation(fam, members[i]);
      if (!is_alternating_sign_matrix(mat))
        v.failed("members are alternating sign matrices", "member " + std::to_string(i));
      if (orientation_of_matrix(fam, mat) != members[i])
        v.failed("members are alternating sign matrices",
                 "member " + std::to_string(i) + " does not round-trip");
    }
    v.ok("members are alternating sign matrices");
  }
}

void verify_factor_ensemble(Verifier& v, const Instance& ins) {
  if (ins.identify) {
    TorusGrid t = torus_grid(ins.identify->first, ins.identify->second);
    std::vector<DFactor> factors;
    v.step("factors enumerate within the edge cap",
           [&] { factors = enumerate_dfactors(t.ctx.primal, *ins.degrees); });
    v.step("every factor meets the degree spec", [&] {
      for (const auto& m : factors) require_dfactor(t.ctx.primal, *ins.degrees, m);
    });
    v.step("twists preserve the winding class and stay in the ensemble",
           [&] { phase_diagram(t, factors); });
    return;
  }

  DualContext ctx = dual_context_of(ins);
  int fs = ins.f_star >= 0 ? ins.f_star : outer_face(ctx.faces);
  DFactorLattice lat;
  v.step("factor lattice builds consistently",
         [&] { lat = dfactor_lattice(ctx, *ins.degrees, fs); });

  std::set<std::pair<int, int>> moves, covers(lat.hasse.covers.begin(), lat.hasse.covers.end());
  std::map<DFactor, int> index;
  for (size_t i = 0; i < lat.members.size(); ++i) index[lat.members[i]] = static_cast<int>(i);
  for (size_t i = 0; i < lat.members.size(); ++i) {
    auto sign = alternating_faces(ctx, lat.members[i]);
    for (int f = 0; f < ctx.dual.nv(); ++f) {
      if (f == fs || sign[f] != 1) continue;
      auto it = index.find(twist(ctx, lat.members[i], f, true));
      if (it == index.end())
        v.failed("twists down are exactly the covers", "twist left the ensemble");
      moves.insert({static_cast<int>(i), it->second});
    }
  }
  if (moves != covers) v.failed("twists down are exactly the covers", "move sets differ");
  v.ok("twists down are exactly the covers");

  const int n = static_cast<int>(lat.members.size());
  LatticeTables t = lattice_tables(ctx.dual, lat.dual_members, fs);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.meet[a][t.join[b][c]] != t.join[t.meet[a][b]][t.meet[a][c]] ||
            t.join[a][t.meet[b][c]] != t.meet[t.join[a][b]][t.join[a][c]])
          v.failed("meet and join distribute", "triple (" + std::to_string(a) + ", " +
                                                   std::to_string(b) + ", " + std::to_string(c) +
                                                   ")");
  v.ok("meet and join distribute");

  if (ins.region && ins.region->kind == RegionKind::Squares) {
    RegionGraph rg = region_graph(*ins.region);
    v.step("corner heights are consistent for every tiling", [&] {
      for (const auto& m : lat.members) domino_heights(rg, m);
    });
  }
}

// True when no single edge disconnects the graph.
bool two_edge_connected(const MultiGraph& g) {
  for (int cut = 0; cut < g.ne(); ++cut) {
    std::vector<char> seen(g.nv(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.rotation(v)) {
        int w = g.other_end(e, v);
        if (e != cut && !seen[w]) seen[w] = 1, stack.push_back(w);
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != g.nv()) return false;
  }
  return true;
}

void verify_trees(Verifier& v, const Instance& ins) {
  if (ins.f_star >= 0 && ins.family != "kn_outer") {
    if (ins.g.ne() > 16) return;  // keep verify desk-scale
    TreeContext tc = make_tree_context(ins.g, ins.v_star, ins.f_star);
    if (!two_edge_connected(ins.g)) {
      // Bridges leave the incidence graph without a usable dual, but the
      // tree-matching correspondence itself still stands.
      HasseGraphH H = hasse_graph_h(tc);
      v.step("tree-matching correspondence round-trips", [&] {
        for (const auto& t : enumerate_spanning_trees(ins.g)) {
          DFactor m = temperley(tc, H, arborescence_pair(tc, t));
          require(temperley_inv(H, m) == t, ErrorKind::Internal,
                  "a tree does not round-trip through its matching");
        }
      });
      return;
    }
    TreeLattice L;
    v.step("swing moves are exactly the matching covers", [&] { L = tree_lattice(tc); });
    v.step("tree-matching correspondence round-trips", [&] {
      for (size_t i = 0; i < L.trees.size(); ++i) {
        require(temperley_inv(L.hg, L.matchings.members[i]) == L.trees[i], ErrorKind::Internal,
                "matching " + std::to_string(i) + " does not invert to its tree");
        require(temperley(tc, L.hg, L.pairs[i]) == L.matchings.members[i], ErrorKind::Internal,
                "tree " + std::to_string(i) + " does not map to its matching");
      }
    });
    if (!ins.hull.empty()) {
      SwingPoset sp = swing_poset_xing(ins.g, ins.v_star, ins.hull);
      std::map<std::vector<char>, int> index;
      for (size_t i = 0; i < L.trees.size(); ++i) index[L.trees[i]] = static_cast<int>(i);
      std::set<std::pair<int, int>> a, b(L.matchings.hasse.covers.begin(),
                                         L.matchings.hasse.covers.end());
      if (sp.trees.size() != L.trees.size())
        v.failed("crossing relation matches the plane lattice", "tree lists differ");
      for (auto [hi, lo] : sp.covers)
        a.insert({index.at(sp.trees[hi]), index.at(sp.trees[lo])});
      if (a != b) v.failed("crossing relation matches the plane lattice", "cover sets differ");
      v.ok("crossing relation matches the plane lattice");
    }
  } else {
    SwingPoset sp;
    v.step("swing moves enumerate within the edge cap",
           [&] { sp = swing_poset_xing(ins.g, ins.v_star, ins.hull); });
    v.check(sp.graded, "swing poset is graded", "unequal maximal chain lengths");
  }
}

void cmd_verify(const Instance& ins) {
  Verifier v;
  static const std::set<std::string> plane_families = {
      "cycle", "path", "grid_pinned", "hexagon", "aztec", "square_with_chord"};
  if (ins.region || plane_families.count(ins.family)) {
    Faces f = trace_faces_surface(ins.g);
    v.check(f.euler == 2, "drawing is spherical", "Euler characteristic is off");
  }
  if (ins.identify) {
    Faces f = trace_faces_surface(ins.g);
    v.check(f.euler == 0, "drawing is toral", "Euler characteristic is off");
  }
  if (ins.reference) verify_orientation_ensemble(v, ins);
  if (ins.degrees) verify_factor_ensemble(v, ins);
  if (ins.v_star >= 0 && (ins.f_star >= 0 || !ins.hull.empty())) verify_trees(v, ins);
  require(v.checks > 0, ErrorKind::BadInput,
          "instance declares nothing to verify: add a manifest");
  std::cout << "all invariants hold (" << v.checks << " checks)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice structures of graph orientations, matchings, and spanning trees"};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "report errors as JSON on stdout");

  SourceOpts gen_o;
  CLI::App* gen = app.add_subcommand("gen", "emit an instance document for a family");
  add_family_flags(gen, gen_o);

  SourceOpts enum_o;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list every member of the ensemble");
  add_input(enumerate, enum_o);

  SourceOpts hasse_o;
  std::string hasse_fmt = "json";
  CLI::App* hasse = app.add_subcommand("hasse", "emit the lattice cover diagram");
  add_input(hasse, hasse_o);
  hasse->add_option("--format", hasse_fmt)->check(CLI::IsMember({"json", "dot"}));

  SourceOpts heights_o;
  CLI::App* heights = app.add_subcommand("heights", "emit height functions per member");
  add_input(heights, heights_o);

  SourceOpts asm_o;
  CLI::App* asm_cmd = app.add_subcommand("asm", "emit members as alternating sign matrices");
  add_input(asm_cmd, asm_o);

  SourceOpts tilings_o;
  CLI::App* tilings = app.add_subcommand("tilings", "list tilings of a region instance");
  add_input(tilings, tilings_o);

  SourceOpts phase_o;
  CLI::App* phase = app.add_subcommand("phase", "classify torus factors by winding");
  add_input(phase, phase_o);

  SourceOpts trees_o;
  std::string trees_fmt = "json";
  CLI::App* trees = app.add_subcommand("trees", "emit the spanning tree lattice");
  add_input(trees, trees_o);
  trees->add_option("--format", trees_fmt)->check(CLI::IsMember({"json", "dot"}));

  SourceOpts verify_o;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite for the instance");
  add_input(verify, verify_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (gen_o.family.empty()) throw UsageError{"gen needs --family"};
      print_json(instance_to_json(make_from_family(gen_o)));
    } else if (enumerate->parsed()) {
      cmd_enumerate(resolve_instance(enum_o));
    } else if (hasse->parsed()) {
      cmd_hasse(resolve_instance(hasse_o), hasse_fmt);
    } else if (heights->parsed()) {
      cmd_heights(resolve_instance(heights_o));
    } else if (asm_cmd->parsed()) {
      cmd_asm(resolve_instance(asm_o));
    } else if (tilings->parsed()) {
      cmd_tilings(resolve_instance(tilings_o));
    } else if (phase->parsed()) {
      cmd_phase(resolve_instance(phase_o));
    } else if (trees->parsed()) {
      cmd_trees(resolve_instance(trees_o), trees_fmt);
    } else if (verify->parsed()) {
      cmd_verify(resolve_instance(verify_o));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.msg << "\n";
    return 2;
  } catch (const VerifyFailure&) {
    return 1;
  } catch (const Error& e) {
    if (json_errors)
      print_json(error_to_json(e));
    else
      std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
