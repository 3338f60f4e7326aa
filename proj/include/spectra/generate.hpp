#pragma once

// Isomorph-free generation of small graphs.
//
// gen_all uses canonical augmentation one vertex at a time: a child built by
// appending vertex v to a parent is kept only when deleting v yields the same
// isomorphism class as deleting the child's canonical deletion vertex (the
// minimum-invariant vertex that comes last in the canonical order). Children
// of one parent are then deduplicated by canonical form.
//
// Triangulations grow from K4 by vertex splitting; maximal outerplanar graphs
// grow from K3 by gluing a triangle onto an outer edge.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/canonical.hpp"
#include "spectra/families.hpp"
#include "spectra/graph.hpp"
#include "spectra/graph6.hpp"
#include "spectra/parallel.hpp"
#include "spectra/topology.hpp"

namespace spectra {

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultGenCap = 10;
inline constexpr int kDefaultTriangulationCap = 12;
inline constexpr int kDefaultOuterplanarCap = 14;

using GraphPredicate = std::function<bool(const Graph&)>;

struct GenOptions {
  // Property closed under vertex deletion; intermediate graphs failing it are
  // pruned together with their descendants.
  GraphPredicate hereditary;
  // Only final-level graphs with exactly this many edges are produced.
  std::optional<int> final_edges;
  int cap = kDefaultGenCap;
  unsigned threads = default_threads();
};

namespace detail {

inline Graph append_vertex(const Graph& parent, std::uint64_t mask) {
  const int k = parent.n();
  GraphBuilder b(k + 1);
  for (auto [u, v] : parent.edges()) b.add_edge(u, v);
  for (int u = 0; u < k; ++u)
    if ((mask >> u) & 1U) b.add_edge(u, k);
  return std::move(b).build();
}

// Accepts `child` (whose last vertex is the new one) as a canonical extension.
// On success, `canon` receives the canonically relabeled child.
inline bool canonical_extension(const Graph& child, Graph& canon) {
  const int n = child.n();
  const int v = n - 1;
  std::vector<int> deg(n);
  for (int u = 0; u < n; ++u) deg[u] = child.degree(u);
  std::vector<long> key(n);
  for (int u = 0; u < n; ++u) {
    long s = 0;
    child.for_each_neighbor(u, [&](int w) { s += deg[w]; });
    key[u] = static_cast<long>(deg[u]) * (static_cast<long>(n) * n + 1) + s;
  }
  const long kmin = *std::min_element(key.begin(), key.end());
  if (key[v] != kmin) return false;
  const auto ties = std::count(key.begin(), key.end(), kmin);

  const auto order = canonical_labeling(child);
  canon = relabel(child, order);
  if (ties == 1) return true;
  int w = -1;
  for (int pos = n - 1; pos >= 0; --pos) {
    if (key[order[pos]] == kmin) {
      w = order[pos];
      break;
    }
  }
  if (w == v) return true;
  return canonical_form(delete_vertex(child, v)) == canonical_form(delete_vertex(child, w));
}

// Canonical children of `parent` that satisfy `opt`, in generation order.
inline std::vector<Graph> children_of(const Graph& parent, bool final_level, const GenOptions& opt) {
  const int k = parent.n();
  std::vector<Graph> out;
  std::set<std::string> seen;
  int want_degree = -1;
  if (final_level && opt.final_edges) {
    want_degree = *opt.final_edges - parent.m();
    if (want_degree < 0 || want_degree > k) return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (want_degree >= 0 && std::popcount(mask) != want_degree) continue;
    Graph child = append_vertex(parent, mask);
    if (opt.hereditary && !opt.hereditary(child)) continue;
    Graph canon;
    if (!canonical_extension(child, canon)) continue;
    if (!seen.insert(graph6_encode(canon)).second) continue;
    out.push_back(std::move(canon));
  }
  return out;
}

// Intermediate levels only; the edge-count filter never applies here.
inline void extend_to(const Graph& g, int target, const GenOptions& opt, std::vector<Graph>& out) {
  if (g.n() == target) {
    out.push_back(g);
    return;
  }
  for (auto& c : children_of(g, false, opt)) extend_to(c, target, opt, out);
}

inline void sort_by_canonical_form(std::vector<Graph>& graphs) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) keys.emplace_back(graph6_encode(graphs[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Graph> sorted;
  sorted.reserve(graphs.size());
  for (auto& [_, i] : keys) sorted.push_back(std::move(graphs[i]));
  graphs = std::move(sorted);
}

}  // namespace detail

// One canonically labeled representative per isomorphism class on n vertices
// satisfying `pred`, sorted by canonical form.
inline std::vector<Graph> gen_all(int n, const GraphPredicate& pred, const GenOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("gen_all: n must be >= 1");
  if (n > opt.cap) throw CapExceeded("gen_all: n=" + std::to_string(n) + " exceeds cap " + std::to_string(opt.cap));
  std::vector<Graph> out;
  const Graph single = empty_graph(1);
  if (n == 1) {
    if ((!opt.final_edges || *opt.final_edges == 0) && (!pred || pred(single))) out.push_back(single);
    return out;
  }
  std::vector<Graph> parents;
  detail::extend_to(single, n - 1, opt, parents);

  std::vector<std::vector<Graph>> per_parent(parents.size());
  parallel_for(
      parents.size(),
      [&](std::size_t i) {
        for (auto& c : detail::children_of(parents[i], true, opt))
          if (!pred || pred(c)) per_parent[i].push_back(std::move(c));
      },
      opt.threads);
  for (auto& chunk : per_parent)
    for (auto& g : chunk) out.push_back(std::move(g));
  detail::sort_by_canonical_form(out);
  return out;
}

// Streaming variant: visits every representative in deterministic generation
// order without materializing the final level.
template <class Visitor>
void for_each_graph(int n, const GraphPredicate& pred, Visitor&& visit, const GenOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("for_each_graph: n must be >= 1");
  if (n > opt.cap) throw CapExceeded("for_each_graph: n exceeds cap");
  const Graph single = empty_graph(1);
  if (n == 1) {
    if ((!opt.final_edges || *opt.final_edges == 0) && (!pred || pred(single))) visit(single);
    return;
  }
  std::vector<Graph> parents;
  detail::extend_to(single, n - 1, opt, parents);
  for (const auto& p : parents)
    for (auto& c : detail::children_of(p, true, opt))
      if (!pred || pred(c)) visit(c);
}

namespace detail {

// Neighbours of v in cyclic order around v in the unique embedding of a
// triangulation. Facial triangles are the triangles whose removal leaves the
// rest of the graph connected.
inline std::vector<std::vector<int>> triangulation_rotations(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<std::vector<int>>> face_nbrs(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= b || !g.has_edge(a, c)) continue;
        auto rest = VertexSet::all(n);
        rest.erase(a);
        rest.erase(b);
        rest.erase(c);
        if (!is_connected(induced_subgraph(g, rest))) continue;
        face_nbrs[a][b].push_back(c);
        face_nbrs[b][a].push_back(c);
        face_nbrs[a][c].push_back(b);
        face_nbrs[c][a].push_back(b);
        face_nbrs[b][c].push_back(a);
        face_nbrs[c][b].push_back(a);
      }
    }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    int prev = -1;
    int cur = nb.front();
    for (std::size_t step = 0; step < nb.size(); ++step) {
      rot[v].push_back(cur);
      const auto& opts = face_nbrs[v][cur];
      if (opts.size() != 2) throw std::logic_error("triangulation_rotations: edge not on exactly two faces");
      const int next = opts[0] != prev ? opts[0] : opts[1];
      prev = cur;
      cur = next;
    }
    if (cur != rot[v].front()) throw std::logic_error("triangulation_rotations: link of a vertex is not a cycle");
  }
  return rot;
}

inline std::vector<Graph> vertex_splits(const Graph& g) {
  const int n = g.n();
  const auto rot = triangulation_rotations(g);
  std::vector<Graph> out;
  for (int v = 0; v < n; ++v) {
    const auto& c = rot[v];
    const int d = static_cast<int>(c.size());
    for (int i = 0; i < d; ++i) {
      for (int len = 2; len <= d - 1; ++len) {  // arc c[i..i+len-1] moves to the new vertex
        GraphBuilder b(n + 1);
        for (auto [x, y] : g.edges()) b.add_edge(x, y);
        for (int k = 1; k + 1 < len; ++k) b.remove_edge(v, c[(i + k) % d]);
        for (int k = 0; k < len; ++k) b.add_edge(n, c[(i + k) % d]);
        b.add_edge(n, v);
        out.push_back(std::move(b).build());
      }
    }
  }
  return out;
}

inline std::vector<Graph> dedupe_canonical(const std::vector<Graph>& graphs) {
  std::map<std::string, Graph> uniq;
  for (const auto& g : graphs) {
    Graph c = canonical_graph(g);
    auto key = graph6_encode(c);
    uniq.try_emplace(std::move(key), std::move(c));
  }
  std::vector<Graph> out;
  out.reserve(uniq.size());
  for (auto& [_, g] : uniq) out.push_back(std::move(g));
  return out;
}

}  // namespace detail

// Maximal planar graphs on n vertices, one per isomorphism class, sorted by
// canonical form. Every triangulation on n >= 5 vertices has an edge whose
// contraction yields a triangulation, so splitting vertices of all
// triangulations on n-1 vertices reaches every class.
inline std::vector<Graph> gen_planar_triangulations(int n, int cap = kDefaultTriangulationCap) {
  if (n < 4) throw std::invalid_argument("gen_planar_triangulations: n must be >= 4");
  if (n > cap) throw CapExceeded("gen_planar_triangulations: n exceeds cap " + std::to_string(cap));
  std::vector<Graph> level{canonical_graph(complete_graph(4))};
  for (int k = 4; k < n; ++k) {
    std::vector<Graph> next;
    for (const auto& g : level)
      for (auto& s : detail::vertex_splits(g)) next.push_back(std::move(s));
    level = detail::dedupe_canonical(next);
  }
  return level;
}

// Filter path used to cross-check the splitting generator.
inline std::vector<Graph> gen_planar_triangulations_by_filter(int n, int cap = kDefaultGenCap) {
  GenOptions opt;
  opt.hereditary = [](const Graph& g) { return is_planar(g); };
  opt.final_edges = 3 * n - 6;
  opt.cap = cap;
  return gen_all(n, [n](const Graph& g) { return g.m() == 3 * n - 6 && is_planar(g); }, opt);
}

// Maximal outerplanar graphs (triangulated polygons) on n vertices.
inline std::vector<Graph> gen_maximal_outerplanar(int n, int cap = kDefaultOuterplanarCap) {
  if (n < 3) throw std::invalid_argument("gen_maximal_outerplanar: n must be >= 3");
  if (n > cap) throw CapExceeded("gen_maximal_outerplanar: n exceeds cap " + std::to_string(cap));
  std::vector<Graph> level{canonical_graph(from_edges(3, {{0, 1}, {1, 2}, {0, 2}}))};
  for (int k = 3; k < n; ++k) {
    std::vector<Graph> next;
    for (const auto& g : level) {
      for (auto [u, v] : g.edges()) {
        if (detail::popcount_and(g.row(u), g.row(v)) != 1) continue;  // chords lie on two triangles
        GraphBuilder b(k + 1);
        for (auto [x, y] : g.edges()) b.add_edge(x, y);
        b.add_edge(k, u);
        b.add_edge(k, v);
        next.push_back(std::move(b).build());
      }
    }
    level = detail::dedupe_canonical(next);
  }
  return level;
}

inline std::vector<Graph> gen_maximal_outerplanar_by_filter(int n, int cap = kDefaultGenCap) {
  GenOptions opt;
  opt.hereditary = [](const Graph& g) { return is_outerplanar(g); };
  opt.final_edges = 2 * n - 3;
  opt.cap = cap;
  return gen_all(n, [n](const Graph& g) { return g.m() == 2 * n - 3 && is_outerplanar(g); }, opt);
}

}  // namespace spectra
