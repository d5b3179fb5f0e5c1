#ifndef LATGRAPH_POSET_HPP
#define LATGRAPH_POSET_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latgraph/error.hpp"

namespace latgraph {

// Finite poset stored as the full reflexive-transitive order relation.
struct Poset {
  int n = 0;
  std::vector<std::vector<char>> le;  // le[a][b]: a <= b

  bool leq(int a, int b) const { return le[a][b] != 0; }

  // Builds from arbitrary generating relations (a strictly below b), taking
  // the transitive closure and rejecting cycles.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& below) {
    Poset p;
    p.n = n;
    p.le.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) p.le[i][i] = 1;
    for (auto [a, b] : below) {
      require(0 <= a && a < n && 0 <= b && b < n, ErrorKind::BadInput,
              "relation element out of range");
      p.le[a][b] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (p.le[i][k])
          for (int j = 0; j < n; ++j)
            if (p.le[k][j]) p.le[i][j] = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        require(!(p.le[i][j] && p.le[j][i]), ErrorKind::BadInput,
                "order relation has a cycle");
    return p;
  }
};

// Cover pairs (lower, upper), ordered lexicographically.
inline std::vector<std::pair<int, int>> poset_covers(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool cover = true;
      for (int m = 0; m < p.n && cover; ++m)
        if (m != a && m != b && p.leq(a, m) && p.leq(m, b)) cover = false;
      if (cover) covers.emplace_back(a, b);
    }
  return covers;
}

// Number of order ideals (downward closed subsets). Uses the deletion
// recursion on a maximal element x: ideals either avoid x, or contain x and
// with it all of its down-set. Subsets are memoized as bitmasks.
inline long long count_ideals(const Poset& p) {
  require(p.n <= 63, ErrorKind::TooLarge, "ideal counting supports at most 63 elements");
  std::vector<std::uint64_t> down(p.n, 0);
  for (int b = 0; b < p.n; ++b)
    for (int a = 0; a < p.n; ++a)
      if (p.leq(a, b)) down[b] |= std::uint64_t{1} << a;
  std::unordered_map<std::uint64_t, long long> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> long long {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int x = -1;  // a maximal element of the restriction to mask
    for (int b = 0; b < p.n && x < 0; ++b) {
      if (!(mask >> b & 1)) continue;
      bool maximal = true;
      for (int c = 0; c < p.n && maximal; ++c)
        if (c != b && (mask >> c & 1) && p.leq(b, c)) maximal = false;
      if (maximal) x = b;
    }
    long long r = self(self, mask & ~(std::uint64_t{1} << x)) + self(self, mask & ~down[x]);
    memo.emplace(mask, r);
    return r;
  };
  return rec(rec, p.n == 63 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << p.n) - 1);
}

// Longest-chain rank from the minimal elements of an acyclic cover relation
// given as (lower, upper) pairs.
inline std::vector<int> longest_chain_ranks(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (auto [lo, hi] : covers) {
    up[lo].push_back(hi);
    indeg[hi]++;
  }
  std::vector<int> rank(n, 0), queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  size_t qi = 0;
  int processed = 0;
  while (qi < queue.size()) {
    int v = queue[qi++];
    ++processed;
    for (int w : up[v]) {
      rank[w] = std::max(rank[w], rank[v] + 1);
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  require(processed == n, ErrorKind::BadInput, "cover relation has a cycle");
  return rank;
}

// A cover relation is graded when every cover step raises the longest-chain
// rank by exactly 1.
inline bool is_graded(int n, const std::vector<std::pair<int, int>>& covers) {
  auto rank = longest_chain_ranks(n, covers);
  for (auto [lo, hi] : covers)
    if (rank[hi] != rank[lo] + 1) return false;
  return true;
}

}  // namespace latgraph

#endif  // LATGRAPH_POSET_HPP
