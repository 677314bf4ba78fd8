#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "ultra/rational.hpp"

namespace ultra::detail {

// Minimax path distance of a complete weighted graph (row-major n×n
// weights): Prim's spanning tree, then single-linkage merging along its
// edges in increasing weight. O(n^2) comparisons, no arithmetic.
inline std::vector<Rational> minimax_closure(std::size_t n, const std::vector<Rational>& w) {
  struct Edge {
    std::size_t a, b;
    Rational weight;
  };
  std::vector<Edge> tree;
  tree.reserve(n ? n - 1 : 0);
  std::vector<bool> in_tree(n, false);
  std::vector<Rational> best(n);
  std::vector<std::size_t> from(n, 0);
  if (n > 0) {
    in_tree[0] = true;
    for (std::size_t v = 1; v < n; ++v) best[v] = w[v];
  }
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in_tree[v] && (pick == n || best[v] < best[pick])) pick = v;
    tree.push_back({from[pick], pick, best[pick]});
    in_tree[pick] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && w[pick * n + v] < best[v]) {
        best[v] = w[pick * n + v];
        from[v] = pick;
      }
    }
  }
  std::stable_sort(tree.begin(), tree.end(),
                   [](const Edge& x, const Edge& y) { return x.weight < y.weight; });

  std::vector<Rational> out(n * n, Rational(0));
  std::vector<std::size_t> cluster(n);
  std::iota(cluster.begin(), cluster.end(), 0);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t v = 0; v < n; ++v) members[v] = {v};
  for (const auto& e : tree) {
    auto ca = cluster[e.a], cb = cluster[e.b];
    if (members[ca].size() < members[cb].size()) std::swap(ca, cb);
    for (auto x : members[ca])
      for (auto y : members[cb]) out[x * n + y] = out[y * n + x] = e.weight;
    for (auto y : members[cb]) cluster[y] = ca;
    members[ca].insert(members[ca].end(), members[cb].begin(), members[cb].end());
    members[cb].clear();
  }
  return out;
}

}  // namespace ultra::detail
