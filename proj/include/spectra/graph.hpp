#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

using Edge = std::pair<int, int>;

inline constexpr std::size_t words_for(int n) {
  return n <= 0 ? 0 : static_cast<std::size_t>((n + 63) / 64);
}

// Subset of 0..n-1 with bitset semantics.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), bits_(words_for(n), 0) {}
  VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
    for (int v : members) insert(v);
  }

  static VertexSet all(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  int universe() const { return n_; }

  void insert(int v) {
    check(v);
    bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(int v) {
    check(v);
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  bool contains(int v) const {
    return v >= 0 && v < n_ && ((bits_[v >> 6] >> (v & 63)) & 1U);
  }

  int size() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }
  bool empty() const { return size() == 0; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < std::min(bits_.size(), o.bits_.size()); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      for (std::uint64_t w = bits_[i]; w; w &= w - 1)
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
    }
    return out;
  }

  std::span<const std::uint64_t> words() const { return bits_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
  void trim() {
    if (n_ % 64 != 0 && !bits_.empty()) bits_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Immutable simple undirected graph. Rows are per-vertex bitsets; a single
// machine word per row for n <= 64, more words beyond that.
class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t row_words() const { return words_; }

  bool has_edge(int u, int v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && ((row_ptr(u)[v >> 6] >> (v & 63)) & 1U);
  }

  std::span<const std::uint64_t> row(int u) const { return {row_ptr(u), words_}; }

  int degree(int u) const {
    int d = 0;
    for (auto w : row(u)) d += std::popcount(w);
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
  }

  template <class F>
  void for_each_neighbor(int u, F&& f) const {
    const std::uint64_t* r = row_ptr(u);
    for (std::size_t i = 0; i < words_; ++i)
      for (std::uint64_t w = r[i]; w; w &= w - 1) f(static_cast<int>(i * 64) + std::countr_zero(w));
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for_each_neighbor(u, [&](int w) { out.push_back(w); });
    return out;
  }

  VertexSet neighborhood(int u) const {
    VertexSet s(n_);
    for_each_neighbor(u, [&](int w) { s.insert(w); });
    return s;
  }

  // Edges (u, v) with u < v, in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](int w) {
        if (u < w) out.emplace_back(u, w);
      });
    return out;
  }

  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

  friend class GraphBuilder;

 private:
  explicit Graph(int n) : n_(n), words_(words_for(n)), adj_(static_cast<std::size_t>(n) * words_for(n), 0) {}

  const std::uint64_t* row_ptr(int u) const { return adj_.data() + static_cast<std::size_t>(u) * words_; }
  std::uint64_t* row_ptr(int u) { return adj_.data() + static_cast<std::size_t>(u) * words_; }

  bool set_edge(int u, int v) {
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    std::uint64_t& cell = row_ptr(u)[v >> 6];
    if (cell & bit) return false;
    cell |= bit;
    row_ptr(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
    ++m_;
    return true;
  }
  bool clear_edge(int u, int v) {
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    std::uint64_t& cell = row_ptr(u)[v >> 6];
    if (!(cell & bit)) return false;
    cell &= ~bit;
    row_ptr(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
    return true;
  }

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Mutable staging area; produces immutable Graph values.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(check_n(n)) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int n() const { return g_.n(); }
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }

  // Returns false when the edge was already present.
  bool add_edge(int u, int v) {
    check_pair(u, v);
    return g_.set_edge(u, v);
  }
  bool remove_edge(int u, int v) {
    check_pair(u, v);
    return g_.clear_edge(u, v);
  }

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  static int check_n(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= g_.n() || v >= g_.n())
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                              std::to_string(g_.n() - 1));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }

  Graph g_;
};

inline Graph from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph empty_graph(int n) { return GraphBuilder(n).build(); }

// Disjoint copies of g and h plus every cross edge; g occupies 0..n_g-1.
inline Graph join(const Graph& g, const Graph& h) {
  const int ng = g.n();
  GraphBuilder b(ng + h.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.n(); ++v) b.add_edge(u, ng + v);
  return std::move(b).build();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.n();
  GraphBuilder b(ng + h.n());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
  return std::move(b).build();
}

inline Graph with_edge(const Graph& g, int u, int v) {
  GraphBuilder b(g);
  if (!b.add_edge(u, v))
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
  return std::move(b).build();
}

inline Graph without_edge(const Graph& g, int u, int v) {
  GraphBuilder b(g);
  if (!b.remove_edge(u, v))
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  return std::move(b).build();
}

// perm[new_index] = old_index.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> inv(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int old = perm[i];
    if (old < 0 || old >= g.n() || inv[old] != -1) throw std::invalid_argument("not a permutation");
    inv[old] = static_cast<int>(i);
  }
  GraphBuilder b(g.n());
  for (auto [u, v] : g.edges()) b.add_edge(inv[u], inv[v]);
  return std::move(b).build();
}

// Induced subgraph on `keep`, relabeled densely in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  auto verts = keep.members();
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(verts.size()));
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) b.add_edge(index[u], index[v]);
  return std::move(b).build();
}

inline Graph delete_vertex(const Graph& g, int v) {
  auto keep = VertexSet::all(g.n());
  keep.erase(v);
  return induced_subgraph(g, keep);
}

struct CutCounts {
  int within_x = 0;
  int between = 0;
  friend bool operator==(const CutCounts&, const CutCounts&) = default;
};

// Edges inside x, and edges with one endpoint in x and the other in y.
inline CutCounts cut_counts(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.universe() != g.n() || y.universe() != g.n()) throw std::invalid_argument("vertex set universe mismatch");
  if (x.intersects(y)) throw std::invalid_argument("cut_counts requires disjoint vertex sets");
  CutCounts c;
  for (int u : x.members()) {
    g.for_each_neighbor(u, [&](int w) {
      if (x.contains(w)) ++c.within_x;
      else if (y.contains(w)) ++c.between;
    });
  }
  c.within_x /= 2;
  return c;
}

// Component index per vertex, numbered in order of smallest member.
inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.n(), -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      g.for_each_neighbor(u, [&](int w) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      });
    }
    ++next;
  }
  return label;
}

inline std::vector<VertexSet> components(const Graph& g) {
  auto label = component_labels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<VertexSet> out(count, VertexSet(g.n()));
  for (int v = 0; v < g.n(); ++v) out[label[v]].insert(v);
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

}  // namespace spectra
