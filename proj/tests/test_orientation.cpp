#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "common.hpp"
#include "latgraph/orientation.hpp"
#include "oracles.hpp"

using namespace latgraph;

namespace {

// Exhaustive reference enumerator: filter all 2^E direction vectors.
std::vector<Orientation> enumerate_brute(const MultiGraph& g, const Orientation& ref) {
  std::vector<Orientation> out;
  auto targets = basis_circulations(g, ref);
  for (std::uint32_t mask = 0; mask < (1u << g.ne()); ++mask) {
    Orientation o(g.ne());
    for (int e = 0; e < g.ne(); ++e) o[e] = mask >> e & 1;
    if (respects_pins(g, o) && basis_circulations(g, o) == targets) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

oracle::RelPoset as_oracle(const Poset& p) {
  oracle::RelPoset r;
  r.n = p.n;
  r.le = p.le;
  return r;
}

}  // namespace

TEST_CASE("tree ensembles are free on every edge", "[orient]") {
  MultiGraph g = testutil::path(2);
  Orientation ref = {1, 1};
  auto members = enumerate_orientations(g, ref);
  REQUIRE(members.size() == 4);
  CHECK(members == enumerate_brute(g, ref));
  CHECK(members == enumerate_orientations_push(g, ref, 2));
  for (const auto& o : members) {
    CHECK(is_member(g, ref, o));
    auto part = accessibility_partition(g, o);
    CHECK(part.count == g.nv());
    auto forced = forced_edges(g, o);
    CHECK(std::count(forced.begin(), forced.end(), 1) == 0);
  }
}

TEST_CASE("path lattice is a chain with the affine rank", "[orient]") {
  MultiGraph g = testutil::path(2);
  Orientation ref = {1, 1};
  int v_star = 2;
  auto members = enumerate_orientations(g, ref);
  Hasse h = hasse_diagram(g, members, v_star);
  REQUIRE(members.size() == 4);
  CHECK(h.covers.size() == 3);
  CHECK(h.graded);
  CHECK(h.rank[h.top] == 3);
  CHECK(members[h.bottom] == Orientation{1, 1});
  CHECK(members[h.top] == Orientation{0, 0});
  CHECK(cover_distance(h, h.top, h.bottom) == 3);

  AffineRank phi = rank_affine(g, v_star, members[h.bottom]);
  for (size_t i = 0; i < members.size(); ++i)
    CHECK(affine_rank_value(phi, members[i]) == h.rank[i]);
}

TEST_CASE("balanced 4-cycle ensemble is the 2x2 ideal lattice", "[orient]") {
  MultiGraph g = testutil::cycle(4);
  Orientation ref = {1, 1, 0, 0};
  int v_star = 0;
  auto members = enumerate_orientations(g, ref);
  REQUIRE(members.size() == 6);
  CHECK(members == enumerate_brute(g, ref));
  CHECK(members == enumerate_orientations_push(g, ref, v_star));

  Hasse h = hasse_diagram(g, members, v_star);
  CHECK(h.covers.size() == 6);
  CHECK(h.graded);
  CHECK(h.rank[h.top] == 4);

  // Push covers coincide with covers of the comparison order.
  Poset order = lattice_order_poset(g, members, v_star);
  auto order_covers = poset_covers(order);
  std::set<std::pair<int, int>> from_push;
  for (auto [hi, lo] : h.covers) from_push.insert({lo, hi});
  CHECK(std::set<std::pair<int, int>>(order_covers.begin(), order_covers.end()) == from_push);

  // Bottom and top are comparable with everything.
  for (int i = 0; i < order.n; ++i) {
    CHECK(order.leq(h.bottom, i));
    CHECK(order.leq(i, h.top));
  }

  // Distributive lattice axioms on the index tables.
  LatticeTables t = lattice_tables(g, members, v_star);
  const int n = static_cast<int>(members.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CHECK(order.leq(t.meet[a][b], a));
      CHECK(order.leq(b, t.join[a][b]));
      for (int c = 0; c < n; ++c) {
        CHECK(t.meet[a][t.join[b][c]] == t.join[t.meet[a][b]][t.meet[a][c]]);
        CHECK(t.join[a][t.meet[b][c]] == t.meet[t.join[a][b]][t.join[a][c]]);
      }
    }

  // Join-irreducibles form the 2x2 grid poset, and their ideals count the
  // lattice.
  Irreducibles irr = join_irreducibles(members, h);
  REQUIRE(irr.member.size() == 4);
  CHECK(oracle::poset_isomorphic(as_oracle(irr.poset), oracle::chain_product({2, 2})));
  CHECK(count_ideals(irr.poset) == static_cast<long long>(members.size()));

  Bias bias = average_bias(g, members);
  LevelIrreducibles lvl = level_irreducibles(g, bias, members, v_star);
  CHECK(lvl.elements.size() == 4);
  CHECK(oracle::poset_isomorphic(as_oracle(lvl.poset), as_oracle(irr.poset)));

  AffineRank phi = rank_affine(g, v_star, members[h.bottom]);
  for (size_t i = 0; i < members.size(); ++i)
    CHECK(affine_rank_value(phi, members[i]) == h.rank[i]);
}

TEST_CASE("heights grade the ensemble", "[orient]") {
  MultiGraph g = testutil::cycle(4);
  Orientation ref = {1, 1, 0, 0};
  int v_star = 0;
  auto members = enumerate_orientations(g, ref);
  Bias bias = average_bias(g, members);
  validate_bias(g, bias, ref);
  // Balanced 4-cycle: every direction is taken by half the members.
  for (int d = 0; d < 2 * g.ne(); ++d) CHECK(bias[d] == Rat(1, 2));

  std::vector<std::vector<Rat>> hs;
  for (const auto& o : members) {
    auto h = height_function(g, bias, o, v_star);
    CHECK(h[v_star] == Rat(0));
    CHECK(orientation_of_height(g, bias, h) == o);
    // Singleton classes: heights differ across every edge.
    for (int e = 0; e < g.ne(); ++e) CHECK(h[g.ends(e).u] != h[g.ends(e).v]);
    hs.push_back(h);
  }

  // Mesas are exactly the classes whose outside neighbors sit strictly lower.
  for (size_t i = 0; i < members.size(); ++i) {
    auto part = accessibility_partition(g, members[i]);
    for (int c = 0; c < part.count; ++c) {
      bool lower = true;
      for (int e = 0; e < g.ne(); ++e) {
        auto [u, v] = g.ends(e);
        if ((part.cls[u] == c) == (part.cls[v] == c)) continue;
        int inside = part.cls[u] == c ? u : v, outside = part.cls[u] == c ? v : u;
        if (hs[i][outside] >= hs[i][inside]) lower = false;
      }
      CHECK(class_is_maximal(g, members[i], part, c) == lower);
    }

    // Pushing a mesa lowers exactly its class by 1.
    for (int c : mesa_classes(g, members[i], part, v_star)) {
      Orientation s = reverse_class_boundary(g, members[i], part, c);
      auto hs2 = height_function(g, bias, s, v_star);
      for (int v = 0; v < g.nv(); ++v)
        CHECK(hs2[v] == (part.cls[v] == c ? hs[i][v] - 1 : hs[i][v]));
    }
  }

  // Meets and joins agree with pointwise min/max of heights.
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      std::vector<Rat> mn(g.nv()), mx(g.nv());
      for (int v = 0; v < g.nv(); ++v) {
        mn[v] = std::min(hs[i][v], hs[j][v]);
        mx[v] = std::max(hs[i][v], hs[j][v]);
      }
      CHECK(orientation_of_height(g, bias, mn) == meet_orientations(g, members[i], members[j], v_star));
      CHECK(orientation_of_height(g, bias, mx) == join_orientations(g, members[i], members[j], v_star));
    }
}

TEST_CASE("directed cycles force their edges", "[orient]") {
  MultiGraph g = testutil::cycle(3);
  Orientation ref = {1, 1, 1};
  auto members = enumerate_orientations(g, ref);
  REQUIRE(members.size() == 1);
  auto part = accessibility_partition(g, ref);
  CHECK(part.count == 1);
  auto forced = forced_edges(g, ref);
  CHECK(std::count(forced.begin(), forced.end(), 1) == g.ne());
  CHECK_THROWS_AS(push_down(g, ref, 0, 1), Error);  // class contains the base

  Hasse h = hasse_diagram(g, members, 0);
  CHECK(h.bottom == h.top);

  Bias bias = average_bias(g, members);
  auto hgt = height_function(g, bias, ref, 0);
  for (int v = 0; v < g.nv(); ++v) CHECK(hgt[v] == Rat(0));  // one class, one level
  CHECK_THROWS_AS(level_irreducibles(g, bias, members, 0), Error);
}

TEST_CASE("chorded square mixes forced and free edges", "[orient]") {
  MultiGraph g = testutil::square_with_chord();
  Orientation ref = {1, 0, 1, 0, 1};
  int v_star = 0;
  auto members = enumerate_orientations(g, ref);
  CHECK(members == enumerate_brute(g, ref));
  CHECK(members == enumerate_orientations_push(g, ref, v_star));
  REQUIRE(members.size() > 1);

  Hasse h = hasse_diagram(g, members, v_star);
  CHECK(h.graded);
  Irreducibles irr = join_irreducibles(members, h);
  CHECK(count_ideals(irr.poset) == static_cast<long long>(members.size()));

  auto part = accessibility_partition(g, ref);
  for (const auto& o : members)
    CHECK(accessibility_partition(g, o).cls == part.cls);  // ensemble invariant

  if (part.count == g.nv()) {
    AffineRank phi = rank_affine(g, v_star, members[h.bottom]);
    for (size_t i = 0; i < members.size(); ++i)
      CHECK(affine_rank_value(phi, members[i]) == h.rank[i]);
  }
}

TEST_CASE("direction constancy coincides with forced edges", "[orient]") {
  MultiGraph g = testutil::square_with_chord();
  Orientation ref = {1, 0, 1, 0, 1};
  auto members = enumerate_orientations(g, ref);
  auto forced = forced_edges(g, ref);
  for (int e = 0; e < g.ne(); ++e) {
    bool constant = true;
    for (const auto& o : members) constant &= o[e] == ref[e];
    CHECK(constant == (forced[e] != 0));
  }
}

TEST_CASE("pinned edges restrict pushes to the interior", "[orient]") {
  MultiGraph g = MultiGraph::build(3, {{0, 1}, {1, 2}}, {}, {{0, true}});
  Orientation ref = {1, 1};
  int v_star = 0;
  auto members = enumerate_orientations(g, ref);
  REQUIRE(members.size() == 2);
  CHECK(members == enumerate_brute(g, ref));
  CHECK(members == enumerate_orientations_push(g, ref, v_star));
  Hasse h = hasse_diagram(g, members, v_star);
  CHECK(h.covers.size() == 1);
  // The free class {2} is maximal in {1,1}; pushing it down gives the bottom.
  CHECK(members[h.bottom] == Orientation{1, 0});
  CHECK(members[h.top] == Orientation{1, 1});

  // The base vertex must lie on the pinned boundary.
  CHECK_THROWS_AS(bottom_orientation(g, ref, 2), Error);
  // Pinned edges must form a connected subgraph.
  MultiGraph bad =
      MultiGraph::build(4, {{0, 1}, {1, 2}, {2, 3}}, {}, {{0, true}, {2, true}});
  CHECK_THROWS_AS(bottom_orientation(bad, Orientation{1, 1, 1}, 0), Error);
  // Flipping a pin is not a member; enumeration from a pin violator throws.
  CHECK_THROWS_AS(enumerate_orientations(g, Orientation{0, 1}), Error);
}

TEST_CASE("enumeration size guard", "[orient]") {
  MultiGraph g = testutil::path(4);
  setenv("ORIENT_LATTICE_MAX_EDGES", "3", 1);
  CHECK_THROWS_AS(enumerate_orientations(g, Orientation{1, 1, 1, 1}), Error);
  setenv("ORIENT_LATTICE_MAX_EDGES", "junk", 1);
  CHECK_THROWS_AS(enumerate_orientations(g, Orientation{1, 1, 1, 1}), Error);
  unsetenv("ORIENT_LATTICE_MAX_EDGES");
  CHECK(enumerate_orientations(g, Orientation{1, 1, 1, 1}).size() == 16);
}

TEST_CASE("incompatible orientations are rejected", "[orient]") {
  MultiGraph g = testutil::cycle(4);
  CHECK_FALSE(is_member(g, Orientation{1, 1, 0, 0}, Orientation{1, 1, 1, 0}));
  CHECK_THROWS_AS(height_difference(g, Orientation{1, 1, 0, 0}, Orientation{1, 1, 1, 0}, 0),
                  Error);
  CHECK_THROWS_AS(require_orientation(g, Orientation{1, 1}), Error);

  auto members = enumerate_orientations(g, Orientation{1, 1, 0, 0});
  Bias bias = average_bias(g, members);
  // A height function must step by 1 - bias or -bias across each edge.
  std::vector<Rat> h = {Rat(0), Rat(3, 2), Rat(0), Rat(-1, 2)};
  CHECK_THROWS_AS(orientation_of_height(g, bias, h), Error);
}
