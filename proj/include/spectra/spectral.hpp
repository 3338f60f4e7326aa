#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spectra/graph.hpp"

namespace spectra {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralCert {
  double lambda1 = 0.0;
  std::vector<double> vec;  // Perron vector scaled so its largest entry is exactly 1
  int x = 0;                // smallest index attaining the largest entry
  double residual = 0.0;    // max_u |lambda1 vec_u - sum_{w~u} vec_w|
  long iterations = 0;
  bool dense_fallback = false;
};

struct EigOptions {
  double tol = 1e-12;
  long max_iter = 1'000'000;
};

namespace detail {

inline double eigen_residual(const Graph& g, double lambda, std::span<const double> v) {
  double r = 0.0;
  for (int u = 0; u < g.n(); ++u) {
    double s = 0.0;
    g.for_each_neighbor(u, [&](int w) { s += v[w]; });
    r = std::max(r, std::abs(lambda * v[u] - s));
  }
  return r;
}

inline double quadratic_form(const Graph& g, std::span<const double> z) {
  double s = 0.0;
  for (int u = 0; u < g.n(); ++u) {
    double t = 0.0;
    g.for_each_neighbor(u, [&](int w) { t += z[w]; });
    s += z[u] * t;
  }
  return s;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scales v so max entry is 1 and returns the index of the first maximum.
inline int normalize_max(std::vector<double>& v) {
  int x = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i)
    if (v[i] > v[x]) x = i;
  const double top = v[x];
  for (double& e : v) e /= top;
  // Entries equal to the maximum up to rounding are snapped so the smallest
  // such index is reported as x.
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[i] >= 1.0 - 1e-14) {
      if (i < x) x = i;
      v[i] = std::min(v[i], 1.0);
    }
  }
  v[x] = 1.0;
  return x;
}

}  // namespace detail

// Leading eigenpair from a dense symmetric eigensolve, Perron-normalized.
inline SpectralCert dense_leading_eig(const Graph& g) {
  const int n = g.n();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, w] : g.edges()) a(u, w) = a(w, u) = 1.0;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  if (eig.info() != Eigen::Success) throw std::runtime_error("dense_leading_eig: eigensolver failed");
  // Eigenvalues come back in increasing order.
  const Eigen::VectorXd top = eig.eigenvectors().col(n - 1);
  const double sign = top.sum() < 0 ? -1.0 : 1.0;
  SpectralCert c;
  c.vec.resize(n);
  for (int i = 0; i < n; ++i) c.vec[i] = sign * top(i);
  c.x = detail::normalize_max(c.vec);
  c.lambda1 = detail::quadratic_form(g, c.vec) / detail::dot(c.vec, c.vec);
  c.residual = detail::eigen_residual(g, c.lambda1, c.vec);
  c.dense_fallback = true;
  return c;
}

// Power iteration on A + I from the all-ones vector. The identity shift makes
// lambda1 + 1 strictly dominant even for bipartite graphs. When max_iter is
// reached the dense solver takes over.
inline SpectralCert leading_eig(const Graph& g, EigOptions opt = {}) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("leading_eig: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("leading_eig: graph is disconnected");
  if (n == 1) {
    SpectralCert c;
    c.vec = {1.0};
    return c;
  }

  std::vector<double> v(n, 1.0);
  std::vector<double> av(n);
  SpectralCert c;
  for (long it = 1; it <= opt.max_iter; ++it) {
    double vav = 0.0;
    double vv = 0.0;
    for (int u = 0; u < n; ++u) {
      double s = 0.0;
      g.for_each_neighbor(u, [&](int w) { s += v[w]; });
      av[u] = s;
      vav += v[u] * s;
      vv += v[u] * v[u];
    }
    const double lambda = vav / vv;
    double res = 0.0;
    for (int u = 0; u < n; ++u) res = std::max(res, std::abs(lambda * v[u] - av[u]));
    if (res <= opt.tol * (1.0 + lambda)) {
      c.vec = v;
      c.x = detail::normalize_max(c.vec);
      c.lambda1 = detail::quadratic_form(g, c.vec) / detail::dot(c.vec, c.vec);
      c.residual = detail::eigen_residual(g, c.lambda1, c.vec);
      c.iterations = it;
      if (c.residual <= opt.tol * (1.0 + c.lambda1)) return c;
    }
    double top = 0.0;
    for (int u = 0; u < n; ++u) {
      av[u] += v[u];
      top = std::max(top, av[u]);
    }
    for (int u = 0; u < n; ++u) v[u] = av[u] / top;
  }

  c = dense_leading_eig(g);
  c.iterations = opt.max_iter;
  if (c.residual > opt.tol * (1.0 + c.lambda1))
    throw ConvergenceError("leading_eig: no convergence within " + std::to_string(opt.max_iter) +
                           " iterations (dense residual " + std::to_string(c.residual) + ")");
  for (double e : c.vec)
    if (!(e > 0.0)) throw ConvergenceError("leading_eig: dense fallback produced a non-positive Perron entry");
  return c;
}

// Largest adjacency eigenvalue for any graph, connected or not.
inline double spectral_radius(const Graph& g, EigOptions opt = {}) {
  if (g.n() == 0) return 0.0;
  if (is_connected(g)) return leading_eig(g, opt).lambda1;
  double best = 0.0;
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    best = std::max(best, leading_eig(induced_subgraph(g, comp), opt).lambda1);
  }
  return best;
}

inline double rayleigh(const Graph& g, std::span<const double> z) {
  if (static_cast<int>(z.size()) != g.n()) throw std::invalid_argument("rayleigh: vector length does not match n");
  const double zz = detail::dot(z, z);
  if (zz == 0.0) throw std::invalid_argument("rayleigh: zero vector");
  return detail::quadratic_form(g, z) / zz;
}

inline double average_degree(const Graph& g) { return g.n() == 0 ? 0.0 : 2.0 * g.m() / g.n(); }

// lambda1 minus the average degree.
inline double irregularity(const Graph& g, EigOptions opt = {}) { return leading_eig(g, opt).lambda1 - average_degree(g); }

// Sign of det(mu I - A), computed by LU with partial pivoting in extended
// precision. Negative exactly when an odd number of eigenvalues exceed mu.
inline int charpoly_sign(const Graph& g, long double mu) {
  using MatrixLd = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = g.n();
  MatrixLd a = MatrixLd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = mu;
    g.for_each_neighbor(i, [&](int w) { a(i, w) = -1.0L; });
  }
  const Eigen::PartialPivLU<MatrixLd> lu(a);
  // Multiplying signs instead of pivots keeps large n clear of overflow.
  int sign = static_cast<int>(lu.permutationP().determinant());
  for (int k = 0; k < n; ++k) {
    const long double p = lu.matrixLU()(k, k);
    if (p == 0.0L) return 0;
    if (p < 0) sign = -sign;
  }
  return sign;
}

}  // namespace spectra
