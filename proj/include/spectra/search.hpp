#pragma once

// Constraint-preserving hill climbing. Candidate moves are ordered by the
// first-order Rayleigh estimate v^T (A' - A) v / v^T v computed with the
// current Perron vector; a move is accepted only after an exact eigensolve
// shows a strict improvement.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/argmax.hpp"
#include "spectra/bounds.hpp"
#include "spectra/canonical.hpp"
#include "spectra/graph.hpp"
#include "spectra/planarity.hpp"
#include "spectra/spectral.hpp"
#include "spectra/topology.hpp"

namespace spectra {

enum class SearchFamily { planar, maximal_planar, outerplanar, connected };

inline std::string_view to_string(SearchFamily f) {
  switch (f) {
    case SearchFamily::planar: return "planar";
    case SearchFamily::maximal_planar: return "maximal_planar";
    case SearchFamily::outerplanar: return "outerplanar";
    case SearchFamily::connected: return "connected";
  }
  return "?";
}

inline SearchFamily search_family_from_string(std::string_view s) {
  if (s == "planar") return SearchFamily::planar;
  if (s == "maximal_planar" || s == "maximal-planar" || s == "triangulation") return SearchFamily::maximal_planar;
  if (s == "outerplanar") return SearchFamily::outerplanar;
  if (s == "connected") return SearchFamily::connected;
  throw std::invalid_argument("unknown search family: " + std::string(s));
}

inline bool in_family(const Graph& g, SearchFamily f) {
  if (!is_connected(g)) return false;
  switch (f) {
    case SearchFamily::planar: return is_planar(g);
    case SearchFamily::maximal_planar: return g.n() >= 3 && is_maximal_planar(g);
    case SearchFamily::outerplanar: return is_outerplanar(g);
    case SearchFamily::connected: return true;
  }
  return false;
}

enum class MoveKind { redirect_leaf, edge_swap, add_edge, remove_edge };

inline std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::redirect_leaf: return "redirect_leaf";
    case MoveKind::edge_swap: return "edge_swap";
    case MoveKind::add_edge: return "add_edge";
    case MoveKind::remove_edge: return "remove_edge";
  }
  return "?";
}

struct Move {
  MoveKind kind = MoveKind::add_edge;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  double estimate = 0.0;  // Rayleigh estimate of the objective change
};

inline Graph apply(const Graph& g, const Move& mv) {
  GraphBuilder b(g);
  for (auto [u, v] : mv.removed)
    if (!b.remove_edge(u, v)) throw std::invalid_argument("move removes a non-edge");
  for (auto [u, v] : mv.added)
    if (!b.add_edge(u, v)) throw std::invalid_argument("move adds an existing edge");
  return std::move(b).build();
}

struct MoveRecord {
  Move move;
  double before = 0.0;
  double after = 0.0;
};

struct SearchTrace {
  std::uint64_t seed = 0;
  CanonicalForm start;
  std::vector<MoveRecord> moves;
  CanonicalForm final_form;
  Graph final_graph;
  double final_value = 0.0;
  long evaluations = 0;
  bool budget_exhausted = false;
};

inline constexpr double kStrictGain = 1e-12;

namespace detail {

inline Edge ordered(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Every candidate move in ranked order, family constraint not yet checked.
inline std::vector<Move> ranked_candidates(const Graph& g, const SpectralCert& cert, SearchFamily family,
                                           ObjectiveKind objective, std::uint64_t seed) {
  const int n = g.n();
  const auto& v = cert.vec;
  const double vtv = dot(v, v);
  const double per_edge = objective == ObjectiveKind::irregularity ? 2.0 / n : 0.0;
  const bool fixed_size = family == SearchFamily::maximal_planar;
  const auto edges = g.edges();
  const auto non_edges = g.non_edges();
  std::vector<Move> out;

  if (!fixed_size) {
    // Strip z and hang it on x.
    const int x = cert.x;
    for (int z = 0; z < n; ++z) {
      if (z == x) continue;
      double sum = 0.0;
      g.for_each_neighbor(z, [&](int w) { sum += v[w]; });
      if (sum >= v[x]) continue;
      if (g.degree(z) == 1 && g.has_edge(z, x)) continue;
      Move mv{MoveKind::redirect_leaf, {}, {}, 0.0};
      g.for_each_neighbor(z, [&](int w) {
        if (w != x) mv.removed.push_back(ordered(z, w));
      });
      if (!g.has_edge(z, x)) mv.added.push_back(ordered(z, x));
      const long dm = static_cast<long>(mv.added.size()) - static_cast<long>(mv.removed.size());
      mv.estimate = 2.0 * v[z] * (v[x] - sum) / vtv - per_edge * dm;
      out.push_back(std::move(mv));
    }
    for (auto [a, b] : non_edges)
      out.push_back({MoveKind::add_edge, {}, {{a, b}}, 2.0 * v[a] * v[b] / vtv - per_edge});
    // Deleting an edge of a connected graph always lowers lambda1.
    if (objective == ObjectiveKind::irregularity)
      for (auto [a, b] : edges) out.push_back({MoveKind::remove_edge, {{a, b}}, {}, -2.0 * v[a] * v[b] / vtv + per_edge});
  }
  for (auto [y, z] : edges)
    for (auto [a, b] : non_edges) {
      const double lost = v[y] * v[z];
      const double gained = v[a] * v[b];
      if (!(lost < gained)) continue;
      out.push_back({MoveKind::edge_swap, {{y, z}}, {{a, b}}, 2.0 * (gained - lost) / vtv});
    }
  if (fixed_size) {
    // Diagonal flips y z -> a b across triangles y z a and y z b. Flips whose
    // product test passes are already in the list above.
    for (auto [y, z] : edges) {
      std::vector<int> common;
      for (int w = 0; w < n; ++w)
        if (w != y && w != z && g.has_edge(y, w) && g.has_edge(z, w)) common.push_back(w);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const int a = common[i];
          const int b = common[j];
          if (g.has_edge(a, b) || v[y] * v[z] < v[a] * v[b]) continue;
          out.push_back({MoveKind::edge_swap, {{y, z}}, {{a, b}}, 2.0 * (v[a] * v[b] - v[y] * v[z]) / vtv});
        }
    }
  }

  std::mt19937_64 rng(seed);
  std::shuffle(out.begin(), out.end(), rng);
  std::stable_sort(out.begin(), out.end(), [](const Move& p, const Move& q) { return p.estimate > q.estimate; });
  return out;
}

inline double objective_value(const Graph& g, ObjectiveKind kind) {
  return SpectralObjective{kind}(g);
}

}  // namespace detail

// Ranked, family-preserving candidate moves. A positive limit truncates the
// list once that many valid moves have been found.
inline std::vector<Move> propose_moves(const Graph& g, const SpectralCert& cert, SearchFamily family,
                                       ObjectiveKind objective = ObjectiveKind::lambda1, std::uint64_t seed = 0,
                                       std::size_t limit = 0) {
  check_cert(g, cert);
  std::vector<Move> out;
  for (auto& mv : detail::ranked_candidates(g, cert, family, objective, seed)) {
    if (!in_family(apply(g, mv), family)) continue;
    out.push_back(std::move(mv));
    if (limit != 0 && out.size() >= limit) break;
  }
  return out;
}

// First-improvement climb: walks the ranked candidates, keeps the first one
// whose exact objective beats the current value by more than kStrictGain,
// and stops when none does or the evaluation budget runs out.
inline SearchTrace hill_climb(const Graph& start, SearchFamily family, ObjectiveKind objective, long budget,
                              std::uint64_t seed) {
  if (budget <= 0) throw std::invalid_argument("hill_climb: budget must be positive");
  if (!in_family(start, family))
    throw std::invalid_argument("hill_climb: start graph is not in family " + std::string(to_string(family)));

  SearchTrace trace;
  trace.seed = seed;
  trace.start = canonical_form(start);
  Graph g = start;
  double value = detail::objective_value(g, objective);
  trace.evaluations = 1;

  for (std::uint64_t step = 0;; ++step) {
    const auto cert = leading_eig(g);
    bool improved = false;
    for (auto& mv : detail::ranked_candidates(g, cert, family, objective, seed + step)) {
      Graph next = apply(g, mv);
      if (!in_family(next, family)) continue;
      if (trace.evaluations >= budget) {
        trace.budget_exhausted = true;
        break;
      }
      const double nv = detail::objective_value(next, objective);
      ++trace.evaluations;
      if (nv > value + kStrictGain) {
        trace.moves.push_back({std::move(mv), value, nv});
        g = std::move(next);
        value = nv;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  trace.final_graph = g;
  trace.final_form = canonical_form(g);
  trace.final_value = value;
  return trace;
}

// Random connected member of the family: a random recursive tree, then the
// remaining pairs in shuffled order, each kept with probability p when the
// family test still passes. Maximal families use p = 1.
inline Graph random_start(SearchFamily family, int n, std::uint64_t seed, double p = -1.0) {
  if (n < 1) throw std::invalid_argument("random_start: n must be >= 1");
  if (family == SearchFamily::maximal_planar && n < 3)
    throw std::invalid_argument("random_start: maximal planar graphs need n >= 3");
  if (p < 0.0) p = family == SearchFamily::maximal_planar ? 1.0 : std::min(1.0, 2.0 * std::log(n + 1.0) / n);
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    b.add_edge(order[i], order[pick(rng)]);
  }
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!b.has_edge(i, j)) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(p);
  const bool constrained = family != SearchFamily::connected;
  for (auto [u, v] : pairs) {
    if (!keep(rng)) continue;
    b.add_edge(u, v);
    if (!constrained) continue;
    const Graph trial = b.build();
    const bool ok = family == SearchFamily::outerplanar ? is_outerplanar(trial) : is_planar(trial);
    if (!ok) b.remove_edge(u, v);
  }
  return std::move(b).build();
}

}  // namespace spectra
