#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

enum class FamilyKind {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  planar_candidate,
  outerplanar_candidate,
  pineapple,
};

inline std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::star: return "star";
    case FamilyKind::planar_candidate: return "planar_candidate";
    case FamilyKind::outerplanar_candidate: return "outerplanar_candidate";
    case FamilyKind::pineapple: return "pineapple";
  }
  return "?";
}

inline FamilyKind family_kind_from_string(std::string_view s) {
  for (auto k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete, FamilyKind::complete_bipartite,
                 FamilyKind::star, FamilyKind::planar_candidate, FamilyKind::outerplanar_candidate,
                 FamilyKind::pineapple})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown family: " + std::string(s));
}

// Parameters: n for single-parameter families (star counts all n vertices),
// (a, b) for complete_bipartite, (clique size, pendant count) for pineapple.
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;

  static FamilySpec path(int n) { return {FamilyKind::path, {n}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::cycle, {n}}; }
  static FamilySpec complete(int n) { return {FamilyKind::complete, {n}}; }
  static FamilySpec complete_bipartite(int a, int b) { return {FamilyKind::complete_bipartite, {a, b}}; }
  static FamilySpec star(int n) { return {FamilyKind::star, {n}}; }
  static FamilySpec planar_candidate(int n) { return {FamilyKind::planar_candidate, {n}}; }
  static FamilySpec outerplanar_candidate(int n) { return {FamilyKind::outerplanar_candidate, {n}}; }
  static FamilySpec pineapple(int clique, int pendants) { return {FamilyKind::pineapple, {clique, pendants}}; }

  int vertex_count() const {
    validate();
    switch (kind) {
      case FamilyKind::complete_bipartite:
      case FamilyKind::pineapple: return params[0] + params[1];
      default: return params[0];
    }
  }

  void validate() const {
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument(std::string(to_string(kind)) + ": " + why);
    };
    const std::size_t want = (kind == FamilyKind::complete_bipartite || kind == FamilyKind::pineapple) ? 2 : 1;
    if (params.size() != want) fail("expected " + std::to_string(want) + " parameter(s)");
    switch (kind) {
      case FamilyKind::path:
      case FamilyKind::complete:
      case FamilyKind::star:
        if (params[0] < 1) fail("n must be >= 1");
        break;
      case FamilyKind::cycle:
        if (params[0] < 3) fail("n must be >= 3");
        break;
      case FamilyKind::complete_bipartite:
        if (params[0] < 1 || params[1] < 1) fail("part sizes must be >= 1");
        break;
      case FamilyKind::planar_candidate:
        if (params[0] < 4) fail("n must be >= 4");
        break;
      case FamilyKind::outerplanar_candidate:
        if (params[0] < 3) fail("n must be >= 3");
        break;
      case FamilyKind::pineapple:
        if (params[0] < 2) fail("clique size must be >= 2");
        if (params[1] < 0) fail("pendant count must be >= 0");
        break;
    }
  }
};

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph complete_bipartite_graph(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

// Clique on 0..clique-1; pendants clique..n-1 all hang off vertex 0.
inline Graph pineapple_graph(int clique, int pendants) {
  GraphBuilder b(clique + pendants);
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) b.add_edge(i, j);
  for (int p = 0; p < pendants; ++p) b.add_edge(0, clique + p);
  return std::move(b).build();
}

inline Graph build(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::path: return path_graph(p[0]);
    case FamilyKind::cycle: return cycle_graph(p[0]);
    case FamilyKind::complete: return complete_graph(p[0]);
    case FamilyKind::complete_bipartite: return complete_bipartite_graph(p[0], p[1]);
    case FamilyKind::star: return complete_bipartite_graph(1, p[0] - 1);
    case FamilyKind::planar_candidate: return join(path_graph(2), path_graph(p[0] - 2));
    case FamilyKind::outerplanar_candidate: return join(empty_graph(1), path_graph(p[0] - 1));
    case FamilyKind::pineapple: return pineapple_graph(p[0], p[1]);
  }
  throw std::logic_error("unreachable family kind");
}

class NoClosedForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// det(t I - Q) for the pineapple quotient with classes {apex}, {other clique
// vertices}, {pendants} and rows [0, m-1, q], [1, m-2, 0], [1, 0, 0].
inline double pineapple_quotient_charpoly(int m, int q, double t) {
  return t * t * t - (m - 2) * t * t - (m - 1) * t - q * (t - m + 2);
}

// Largest root of the quotient cubic, by bisection on [m-1, m+q].
inline double pineapple_lambda1(int m, int q, double tol = 1e-13) {
  double lo = m - 1;
  double hi = m + q;
  if (pineapple_quotient_charpoly(m, q, lo) >= 0.0) return lo;  // q = 0: the clique value m-1
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pineapple_quotient_charpoly(m, q, mid) < 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double lambda1_closed(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::complete: return p[0] - 1;
    case FamilyKind::cycle: return 2.0;
    case FamilyKind::complete_bipartite: return std::sqrt(static_cast<double>(p[0]) * p[1]);
    case FamilyKind::star: return std::sqrt(static_cast<double>(p[0] - 1));
    case FamilyKind::path: return 2.0 * std::cos(std::numbers::pi / (p[0] + 1));
    case FamilyKind::pineapple: return pineapple_lambda1(p[0], p[1]);
    case FamilyKind::planar_candidate:
    case FamilyKind::outerplanar_candidate:
      throw NoClosedForm(std::string(to_string(spec.kind)) + " has no closed-form spectral radius");
  }
  throw std::logic_error("unreachable family kind");
}

inline double pineapple_irregularity(int m, int q) {
  const int n = m + q;
  const double edges = m * (m - 1) / 2.0 + q;
  return pineapple_lambda1(m, q) - 2.0 * edges / n;
}

struct BestClique {
  int m_star = 0;
  double objective = 0.0;
  bool tied = false;  // another clique size matched the optimum within 1e-12
};

// Scans clique sizes 2..n of PA(m, n-m) for the largest lambda1 minus average
// degree; ties go to the smaller clique.
inline BestClique pineapple_best_clique(int n) {
  if (n < 3) throw std::invalid_argument("pineapple_best_clique: n must be >= 3");
  BestClique best{2, pineapple_irregularity(2, n - 2), false};
  for (int m = 3; m <= n; ++m) {
    const double v = pineapple_irregularity(m, n - m);
    if (v > best.objective + 1e-12) {
      best = {m, v, false};
    } else if (std::abs(v - best.objective) <= 1e-12) {
      best.tied = true;
    }
  }
  return best;
}

struct PineappleShape {
  int clique = 0;
  int pendants = 0;
};

// Recognizes PA(m, q) up to isomorphism. Stars are reported as PA(2, n-2).
inline std::optional<PineappleShape> as_pineapple(const Graph& g) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  std::vector<int> leaves;
  std::vector<int> core;
  for (int v = 0; v < n; ++v) (g.degree(v) == 1 ? leaves : core).push_back(v);
  if (n == 2) return g.m() == 1 ? std::optional<PineappleShape>({2, 0}) : std::nullopt;
  if (core.empty()) return std::nullopt;
  int apex = -1;
  for (int l : leaves) {
    const int a = g.neighbors(l)[0];
    if (g.degree(a) == 1) return std::nullopt;  // isolated K2
    if (apex == -1) apex = a;
    else if (apex != a) return std::nullopt;
  }
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i + 1; j < core.size(); ++j)
      if (!g.has_edge(core[i], core[j])) return std::nullopt;
  for (int c : core)
    for (int l : leaves)
      if (g.has_edge(c, l) && c != apex) return std::nullopt;
  if (core.size() == 1) return PineappleShape{2, n - 2};
  return PineappleShape{static_cast<int>(core.size()), static_cast<int>(leaves.size())};
}

}  // namespace spectra
