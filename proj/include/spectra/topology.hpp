#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/planarity.hpp"

namespace spectra {

// A graph is outerplanar iff adding a vertex adjacent to everything keeps it planar.
inline bool is_outerplanar(const Graph& g) {
  if (g.n() >= 2 && g.m() > 2 * g.n() - 3) return false;
  return is_planar(join(empty_graph(1), g));
}

inline bool is_maximal_planar(const Graph& g) {
  if (g.n() < 3) throw std::invalid_argument("is_maximal_planar: needs at least 3 vertices");
  return g.m() == 3 * g.n() - 6 && is_planar(g);
}

inline bool is_maximal_outerplanar(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("is_maximal_outerplanar: needs at least 2 vertices");
  return g.m() == 2 * g.n() - 3 && is_outerplanar(g);
}

namespace detail {

inline int popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

// Extends `chosen` with candidates from index `from`, keeping `common` as the
// intersection of the chosen vertices' neighborhoods.
inline bool complete_bipartite_search(const Graph& g, const std::vector<int>& cand, std::size_t from, int left,
                                      std::vector<std::uint64_t>& common, int b) {
  if (left == 0) {
    int c = 0;
    for (auto w : common) c += std::popcount(w);
    return c >= b;
  }
  for (std::size_t i = from; i + static_cast<std::size_t>(left) <= cand.size(); ++i) {
    auto row = g.row(cand[i]);
    std::vector<std::uint64_t> next(common.size());
    int c = 0;
    for (std::size_t k = 0; k < common.size(); ++k) {
      next[k] = common[k] & row[k];
      c += std::popcount(next[k]);
    }
    if (c < b) continue;
    if (complete_bipartite_search(g, cand, i + 1, left - 1, next, b)) return true;
  }
  return false;
}

}  // namespace detail

// True iff K_{a,b} is a (not necessarily induced) subgraph: some a-set whose
// members share at least b common neighbours.
inline bool contains_complete_bipartite(const Graph& g, int a, int b) {
  if (a < 1 || a > b) throw std::invalid_argument("contains_complete_bipartite: need 1 <= a <= b");
  if (a + b > g.n()) return false;
  std::vector<int> cand;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= b) cand.push_back(v);
  std::vector<std::uint64_t> all(g.row_words(), ~std::uint64_t{0});
  return detail::complete_bipartite_search(g, cand, 0, a, all, b);
}

inline bool triangle_free(const Graph& g) {
  for (int u = 0; u < g.n(); ++u) {
    bool hit = false;
    g.for_each_neighbor(u, [&](int w) {
      if (w > u && detail::popcount_and(g.row(u), g.row(w)) > 0) hit = true;
    });
    if (hit) return false;
  }
  return true;
}

}  // namespace spectra
