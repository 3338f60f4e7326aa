#pragma once

// Canonical labeling by equitable-partition refinement and backtracking over
// individualizations. The canonical graph is the leaf whose upper-triangle
// adjacency bit string (graph6 order) is lexicographically smallest.
// Automorphisms discovered at equal leaves prune sibling branches, and a leaf
// equivalent to the first or best leaf jumps back to the level where its
// path diverged.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/graph6.hpp"

namespace spectra {

struct CanonicalForm {
  std::string bytes;  // graph6 of the canonically relabeled graph

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.n()), words_(g.row_words()) {}

  // order[pos] = original vertex at canonical position pos.
  std::vector<int> run() {
    if (n_ == 0) return {};
    Partition root;
    root.lab.resize(n_);
    std::iota(root.lab.begin(), root.lab.end(), 0);
    root.start.assign(n_, 0);
    root.start[0] = 1;
    // Seed with degree classes so the first refinement pass is cheap.
    std::stable_sort(root.lab.begin(), root.lab.end(), [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
    for (int p = 1; p < n_; ++p)
      if (g_.degree(root.lab[p]) != g_.degree(root.lab[p - 1])) root.start[p] = 1;
    prefix_.clear();
    search(std::move(root), 0);
    return best_lab_;
  }

  std::size_t leaves() const { return leaves_; }
  const std::vector<std::vector<int>>& automorphisms() const { return gens_; }

 private:
  struct Partition {
    std::vector<int> lab;
    std::vector<unsigned char> start;  // 1 where a cell begins
  };

  static bool discrete(const Partition& p) {
    return std::all_of(p.start.begin(), p.start.end(), [](unsigned char s) { return s != 0; });
  }

  int cell_end(const Partition& p, int s) const {
    int e = s + 1;
    while (e < n_ && !p.start[e]) ++e;
    return e;
  }

  void refine(Partition& p) const {
    std::vector<std::uint64_t> mask(words_);
    std::vector<int> cnt(n_);
    std::vector<std::pair<int, int>> tmp;
  again:
    for (int ws = 0; ws < n_; ws = cell_end(p, ws)) {
      const int we = cell_end(p, ws);
      std::fill(mask.begin(), mask.end(), 0);
      for (int k = ws; k < we; ++k) mask[p.lab[k] >> 6] |= std::uint64_t{1} << (p.lab[k] & 63);
      for (int cs = 0; cs < n_; cs = cell_end(p, cs)) {
        const int ce = cell_end(p, cs);
        if (ce - cs < 2) continue;
        bool uniform = true;
        for (int k = cs; k < ce; ++k) {
          auto row = g_.row(p.lab[k]);
          int c = 0;
          for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row[w] & mask[w]);
          cnt[k] = c;
          if (c != cnt[cs]) uniform = false;
        }
        if (uniform) continue;
        tmp.clear();
        for (int k = cs; k < ce; ++k) tmp.emplace_back(cnt[k], p.lab[k]);
        std::stable_sort(tmp.begin(), tmp.end(), [](auto& a, auto& b) { return a.first < b.first; });
        for (int k = cs; k < ce; ++k) {
          p.lab[k] = tmp[k - cs].second;
          if (k > cs && tmp[k - cs].first != tmp[k - cs - 1].first) p.start[k] = 1;
        }
        goto again;
      }
    }
  }

  std::vector<std::uint64_t> leaf_code(const std::vector<int>& lab) const {
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    std::vector<std::uint64_t> code((bits + 63) / 64, 0);
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
      auto row = g_.row(lab[j]);
      for (int i = 0; i < j; ++i, ++k) {
        const int u = lab[i];
        if ((row[u >> 6] >> (u & 63)) & 1U) code[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
      }
    }
    return code;
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    gens_.push_back(std::move(gamma));
  }

  // Returns the depth to resume at; values below `depth` unwind the recursion.
  int search(Partition p, int depth) {
    refine(p);
    if (discrete(p)) return leaf(p, depth);

    // First smallest non-singleton cell.
    int ts = -1;
    int tlen = n_ + 1;
    for (int s = 0; s < n_; s = cell_end(p, s)) {
      int len = cell_end(p, s) - s;
      if (len > 1 && len < tlen) {
        ts = s;
        tlen = len;
      }
    }
    const std::vector<int> cands(p.lab.begin() + ts, p.lab.begin() + ts + tlen);
    std::vector<int> tried;
    for (int c : cands) {
      if (!tried.empty() && same_orbit_as_tried(c, tried)) continue;
      tried.push_back(c);
      Partition child = p;
      auto it = std::find(child.lab.begin() + ts, child.lab.begin() + ts + tlen, c);
      std::rotate(child.lab.begin() + ts, it, it + 1);
      child.start[ts + 1] = 1;
      prefix_.push_back(c);
      int resume = search(std::move(child), depth + 1);
      prefix_.pop_back();
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  int leaf(const Partition& p, int depth) {
    ++leaves_;
    auto code = leaf_code(p.lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.lab;
      first_code_ = best_code_ = std::move(code);
      first_path_ = best_path_ = prefix_;
      return depth - 1;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, p.lab);
      return divergence(prefix_, first_path_);
    }
    if (code == best_code_) {
      record_automorphism(best_lab_, p.lab);
      return divergence(prefix_, best_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = p.lab;
      best_path_ = prefix_;
    }
    return depth - 1;
  }

  bool same_orbit_as_tried(int c, const std::vector<int>& tried) const {
    if (gens_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool any = false;
    for (const auto& gamma : gens_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    if (!any) return false;
    const int rc = find(c);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == rc; });
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  std::vector<int> prefix_;
  std::vector<int> first_lab_, best_lab_, first_path_, best_path_;
  std::vector<std::uint64_t> first_code_, best_code_;
  std::vector<std::vector<int>> gens_;
  std::size_t leaves_ = 0;
};

}  // namespace detail

inline std::vector<int> canonical_labeling(const Graph& g) { return detail::Canonizer(g).run(); }

inline Graph canonical_graph(const Graph& g) {
  auto order = canonical_labeling(g);
  return relabel(g, order);
}

inline CanonicalForm canonical_form(const Graph& g) { return {graph6_encode(canonical_graph(g))}; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b);
}

}  // namespace spectra
