#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/canonical.hpp"
#include "spectra/families.hpp"
#include "spectra/graph.hpp"
#include "spectra/spectral.hpp"
#include "spectra/topology.hpp"

namespace spectra {

inline constexpr double kBoundTol = 1e-9;

inline double stanley_bound(long m) {
  if (m < 0) throw std::invalid_argument("stanley_bound: negative edge count");
  return (-1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0;
}

// sqrt(2m - (n - 1)); valid upper bound on lambda1 for connected graphs.
inline double hong_bound(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("hong_bound: graph is disconnected");
  const long slack = 2L * g.m() - (g.n() - 1);
  if (slack < 0) throw std::logic_error("hong_bound: 2m < n-1 on a connected graph");
  return std::sqrt(static_cast<double>(slack));
}

struct WalkBound {
  double lhs = 0.0;  // lambda1^2
  double rhs = 0.0;  // 2 e(N(x)) + e(N(x), V \ N(x))
};

inline void check_cert(const Graph& g, const SpectralCert& cert) {
  if (static_cast<int>(cert.vec.size()) != g.n() || cert.x < 0 || cert.x >= g.n())
    throw std::invalid_argument("certificate does not match graph size");
  const double res = detail::eigen_residual(g, cert.lambda1, cert.vec);
  if (res > 1e-6 * (1.0 + cert.lambda1)) throw std::invalid_argument("certificate does not belong to this graph");
}

inline WalkBound walk_bound(const Graph& g, const SpectralCert& cert) {
  check_cert(g, cert);
  const VertexSet nx = g.neighborhood(cert.x);
  const auto cut = cut_counts(g, nx, nx.complement());
  return {cert.lambda1 * cert.lambda1, 2.0 * cut.within_x + cut.between};
}

inline long mantel_limit(int n) { return static_cast<long>(n) * n / 4; }

struct MantelResult {
  bool applicable = false;  // triangle-free
  bool passes = false;      // m <= floor(n^2/4); false when not applicable
  bool extremal = false;    // m == floor(n^2/4)
  bool structural = false;  // extremal and isomorphic to the balanced complete bipartite graph
};

inline MantelResult mantel_check(const Graph& g) {
  MantelResult r;
  r.applicable = triangle_free(g);
  if (!r.applicable) return r;
  const long limit = mantel_limit(g.n());
  r.passes = g.m() <= limit;
  r.extremal = g.m() == limit;
  if (r.extremal) r.structural = isomorphic(g, complete_bipartite_graph(g.n() / 2, g.n() - g.n() / 2));
  return r;
}

// True when every edge lies inside one component that is a clique and all
// other vertices are isolated.
inline bool is_clique_plus_isolated(const Graph& g) {
  int nontrivial = 0;
  for (const auto& comp : components(g)) {
    const int k = comp.size();
    if (k == 1) continue;
    if (++nontrivial > 1) return false;
    for (int v : comp.members())
      if (g.degree(v) != k - 1) return false;
  }
  return true;
}

struct BoundReport {
  double lambda1 = 0.0;
  double avg_degree = 0.0;
  int degree_x = 0;
  int max_degree = 0;
  double stanley_rhs = 0.0;
  double hong_rhs = 0.0;
  double walk_bound_lhs = 0.0;
  double walk_bound_rhs = 0.0;
  bool mantel_applicable = false;
  long mantel_rhs = 0;
  bool stanley_equality = false;
  bool mantel_extremal = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline BoundReport check_all(const Graph& g, EigOptions opt = {}) {
  if (!is_connected(g)) throw std::invalid_argument("check_all: graph is disconnected");
  const auto cert = leading_eig(g, opt);
  BoundReport r;
  r.lambda1 = cert.lambda1;
  r.avg_degree = average_degree(g);
  r.degree_x = g.degree(cert.x);
  r.max_degree = g.max_degree();
  r.stanley_rhs = stanley_bound(g.m());
  r.hong_rhs = hong_bound(g);
  const auto walk = walk_bound(g, cert);
  r.walk_bound_lhs = walk.lhs;
  r.walk_bound_rhs = walk.rhs;
  r.mantel_rhs = mantel_limit(g.n());
  r.stanley_equality = std::abs(r.lambda1 - r.stanley_rhs) < kBoundTol;

  const double tol = kBoundTol;
  auto require = [&](bool ok, const char* name) {
    if (!ok) r.violations.emplace_back(name);
  };
  require(r.avg_degree <= r.lambda1 + tol, "average_degree");
  require(r.lambda1 <= r.degree_x + tol, "degree_at_x");
  require(r.lambda1 <= r.max_degree + tol, "max_degree");
  require(r.lambda1 <= r.stanley_rhs + tol, "stanley");
  require(r.lambda1 <= r.hong_rhs + tol, "hong");
  require(r.walk_bound_lhs <= r.walk_bound_rhs + tol, "walk_bound");
  if (r.stanley_equality) require(is_clique_plus_isolated(g), "stanley_equality_structure");

  const auto mantel = mantel_check(g);
  r.mantel_applicable = mantel.applicable;
  r.mantel_extremal = mantel.extremal;
  if (mantel.applicable) {
    require(mantel.passes, "mantel");
    if (mantel.extremal) require(mantel.structural, "mantel_equality_structure");
  }
  return r;
}

}  // namespace spectra
