#pragma once

// Left-right planarity test (de Fraysseix-Rosenstiehl criterion, in the
// formulation with conflict pairs of return-edge intervals). Decision only;
// no embedding is produced.

#include <algorithm>
#include <utility>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

namespace detail {

class LeftRightTest {
 public:
  explicit LeftRightTest(const Graph& g) : g_(g), n_(g.n()) {}

  bool run() {
    if (n_ > 2 && g_.m() > 3 * n_ - 6) return false;
    const int m = g_.m();
    height_.assign(n_, -1);
    parent_edge_.assign(n_, -1);
    out_.assign(n_, {});
    src_.reserve(m);
    dst_.reserve(m);
    lowpt_.reserve(m);
    lowpt2_.reserve(m);
    nesting_.reserve(m);
    oriented_.assign(static_cast<std::size_t>(n_) * n_, 0);

    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == -1) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    for (auto& adj : out_)
      std::stable_sort(adj.begin(), adj.end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });

    ref_.assign(src_.size(), -1);
    lowpt_edge_.assign(src_.size(), -1);
    stack_bottom_.assign(src_.size(), 0);
    for (int r : roots)
      if (!test(r)) return false;
    return true;
  }

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
    void swap_sides() { std::swap(left, right); }
  };

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void orient(int v) {
    const int e = parent_edge_[v];
    for (int w : g_.neighbors(v)) {
      auto& mark = oriented_[static_cast<std::size_t>(v) * n_ + w];
      if (mark) continue;
      mark = 1;
      oriented_[static_cast<std::size_t>(w) * n_ + v] = 1;

      const int vw = static_cast<int>(src_.size());
      src_.push_back(v);
      dst_.push_back(w);
      lowpt_.push_back(height_[v]);
      lowpt2_.push_back(height_[v]);
      nesting_.push_back(0);
      out_[v].push_back(vw);

      if (height_[w] == -1) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }

      nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);

      if (e != -1) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    const auto& adj = out_[v];
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const int ei = adj[i];
      const int w = dst_[ei];
      stack_bottom_[ei] = stack_.size();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {
        if (i == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != -1) {
      const int u = src_[e];
      trim_back_edges(u);
      if (lowpt_[e] < height_[u]) {
        const auto& top = stack_.back();
        const int hl = top.left.high;
        const int hr = top.right.high;
        ref_[e] = (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
      }
    }
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap_sides();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) p.right = q.right;
        else ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() != stack_bottom_[ei]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap_sides();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != -1) ref_[p.right.low] = q.right.high;
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty()) p.left = q.left;
      else ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void trim_back_edges(int u) {
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (stack_.empty()) return;
    ConflictPair p = stack_.back();
    stack_.pop_back();
    while (p.left.high != -1 && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high == -1 && p.left.low != -1) {
      ref_[p.left.low] = p.right.low;
      p.left.low = -1;
    }
    while (p.right.high != -1 && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high == -1 && p.right.low != -1) {
      ref_[p.right.low] = p.left.low;
      p.right.low = -1;
    }
    stack_.push_back(p);
  }

  const Graph& g_;
  int n_;
  std::vector<int> height_, parent_edge_;
  std::vector<std::vector<int>> out_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_;
  std::vector<unsigned char> oriented_;
  std::vector<int> ref_, lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> stack_;
};

}  // namespace detail

inline bool is_planar(const Graph& g) { return detail::LeftRightTest(g).run(); }

}  // namespace spectra
