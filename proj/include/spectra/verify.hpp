#pragma once

// Enumeration campaigns for the three extremal questions: which triangulation
// maximizes lambda1, which maximal outerplanar graph maximizes lambda1, and
// which connected graph maximizes lambda1 minus the average degree.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spectra/argmax.hpp"
#include "spectra/families.hpp"
#include "spectra/generate.hpp"

namespace spectra {

enum class Conjecture { planar, outerplanar, pineapple };

inline std::string_view to_string(Conjecture c) {
  switch (c) {
    case Conjecture::planar: return "planar";
    case Conjecture::outerplanar: return "outerplanar";
    case Conjecture::pineapple: return "pineapple";
  }
  return "?";
}

inline Conjecture conjecture_from_string(std::string_view s) {
  if (s == "planar") return Conjecture::planar;
  if (s == "outerplanar") return Conjecture::outerplanar;
  if (s == "pineapple") return Conjecture::pineapple;
  throw std::invalid_argument("unknown verify family: " + std::string(s) + " (expected planar|outerplanar|pineapple)");
}

struct PineappleVerdict {
  bool is_pineapple = false;
  int clique_size = 0;      // 0 when the argmax is not a pineapple
  int expected_clique = 0;  // ceil(n/2) + 1
  int m_star = 0;           // best clique size among pineapples on n vertices
  double best_pineapple_value = 0.0;
  bool dominates_pineapples = false;  // enumerated optimum >= best pineapple value
};

struct VerifyResult {
  EnumReport report;
  std::optional<PineappleVerdict> pineapple;
};

inline int min_vertices(Conjecture c) { return c == Conjecture::planar ? 4 : 3; }

inline int default_cap(Conjecture c) {
  switch (c) {
    case Conjecture::planar: return kDefaultTriangulationCap;
    case Conjecture::outerplanar: return kDefaultOuterplanarCap;
    case Conjecture::pineapple: return kDefaultGenCap;
  }
  return kDefaultGenCap;
}

inline Graph conjectured_graph(Conjecture c, int n) {
  switch (c) {
    case Conjecture::planar: return build(FamilySpec::planar_candidate(n));
    case Conjecture::outerplanar: return build(FamilySpec::outerplanar_candidate(n));
    case Conjecture::pineapple: {
      const int m = pineapple_best_clique(n).m_star;
      return pineapple_graph(m, n - m);
    }
  }
  throw std::logic_error("unreachable conjecture");
}

inline VerifyResult verify(Conjecture c, int n, double tie_tol = kTieTol, std::optional<int> cap = std::nullopt,
                           unsigned threads = default_threads()) {
  if (n < min_vertices(c))
    throw std::invalid_argument(std::string(to_string(c)) + ": n must be >= " + std::to_string(min_vertices(c)));
  const int limit = cap.value_or(default_cap(c));
  std::vector<Graph> graphs;
  SpectralObjective objective{ObjectiveKind::lambda1};
  ArgmaxOptions opt;
  opt.family = std::string(to_string(c));
  opt.n = n;
  opt.threads = threads;

  switch (c) {
    case Conjecture::planar: {
      graphs = gen_planar_triangulations(n, limit);
      const auto target = canonical_form(conjectured_graph(c, n));
      opt.conjecture = [target](const Graph& g) { return canonical_form(g) == target; };
      break;
    }
    case Conjecture::outerplanar: {
      graphs = gen_maximal_outerplanar(n, limit);
      const auto target = canonical_form(conjectured_graph(c, n));
      opt.conjecture = [target](const Graph& g) { return canonical_form(g) == target; };
      break;
    }
    case Conjecture::pineapple: {
      GenOptions gen;
      gen.cap = limit;
      gen.threads = threads;
      graphs = gen_all(n, [](const Graph& g) { return is_connected(g); }, gen);
      objective.kind = ObjectiveKind::irregularity;
      opt.conjecture = [](const Graph& g) { return as_pineapple(g).has_value(); };
      break;
    }
  }

  VerifyResult out;
  out.report = argmax_over(std::span<const Graph>(graphs), objective, tie_tol, opt);
  if (c == Conjecture::pineapple) {
    PineappleVerdict p;
    const auto best = pineapple_best_clique(n);
    p.m_star = best.m_star;
    p.expected_clique = (n + 1) / 2 + 1;
    const Graph pa = pineapple_graph(best.m_star, n - best.m_star);
    p.best_pineapple_value = objective(pa);
    const Graph& top = out.report.argmax_graphs.front();
    if (out.report.argmax_graphs.size() == 1)
      if (auto shape = as_pineapple(top)) {
        p.is_pineapple = true;
        p.clique_size = shape->clique;
      }
    // The pineapple is itself enumerated, so this only fails on a solver or
    // generator defect. Equal classes compare equal without floating point.
    p.dominates_pineapples = out.report.argmax.front() == canonical_form(pa) ||
                             out.report.best_value > p.best_pineapple_value ||
                             detail::compare_precise(top, pa, objective) >= 0;
    out.pineapple = p;
  }
  return out;
}

}  // namespace spectra
