#pragma once

#include <algorithm>
#include <chrono>
#include <concepts>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/canonical.hpp"
#include "spectra/graph.hpp"
#include "spectra/parallel.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

enum class ObjectiveKind { lambda1, irregularity };

inline std::string_view to_string(ObjectiveKind k) { return k == ObjectiveKind::lambda1 ? "lambda1" : "irregularity"; }

inline ObjectiveKind objective_from_string(std::string_view s) {
  if (s == "lambda1" || s == "lambda") return ObjectiveKind::lambda1;
  if (s == "irregularity") return ObjectiveKind::irregularity;
  throw std::invalid_argument("unknown objective: " + std::string(s));
}

// lambda1(g) + offset(g): offset is 0 for lambda1 and -2m/n for irregularity.
struct SpectralObjective {
  ObjectiveKind kind = ObjectiveKind::lambda1;
  EigOptions eig{1e-12, 20000};

  double offset(const Graph& g) const { return kind == ObjectiveKind::lambda1 ? 0.0 : -average_degree(g); }
  double operator()(const Graph& g) const { return leading_eig(g, eig).lambda1 + offset(g); }
};

template <class Obj>
concept ShiftedSpectralObjective = requires(const Obj& o, const Graph& g) {
  { o(g) } -> std::convertible_to<double>;
  { o.offset(g) } -> std::convertible_to<double>;
};

struct EnumReport {
  std::string family;
  int n = 0;
  long count = 0;
  double best_value = 0.0;
  std::vector<CanonicalForm> argmax;
  std::vector<Graph> argmax_graphs;
  bool matches_conjecture = false;
  long runtime_ms = 0;
  bool escalated = false;  // a near-tie was resolved by the high-precision path
};

struct ArgmaxOptions {
  std::string family;
  int n = 0;
  // Conjectured extremal property; matches_conjecture requires a unique
  // argmax satisfying it.
  std::function<bool(const Graph&)> conjecture;
  unsigned threads = default_threads();
};

inline constexpr double kTieTol = 1e-8;
inline constexpr double kEscalationTol = 1e-14;

namespace detail {

// +1 if the objective of a exceeds that of b, -1 if below, 0 when the
// high-precision path cannot separate them.
template <ShiftedSpectralObjective Obj>
int compare_precise(const Graph& a, const Graph& b, const Obj& obj) {
  const auto ca = dense_leading_eig(a);
  const auto cb = dense_leading_eig(b);
  const double va = ca.lambda1 + obj.offset(a);
  const double vb = cb.lambda1 + obj.offset(b);
  if (va == vb) return 0;
  const long double mid = (static_cast<long double>(va) + vb) / 2.0L;
  // det(mu I - A) < 0 iff lambda1 > mu, given lambda2 < mu.
  const int sa = charpoly_sign(a, mid - obj.offset(a));
  const int sb = charpoly_sign(b, mid - obj.offset(b));
  if (sa < 0 && sb > 0) return 1;
  if (sa > 0 && sb < 0) return -1;
  return 0;
}

}  // namespace detail

// Evaluates every graph, keeps those within tie_tol of the best value, and
// settles near-ties between non-isomorphic graphs at higher precision.
template <class Obj>
EnumReport argmax_over(std::span<const Graph> graphs, const Obj& objective, double tie_tol = kTieTol,
                       const ArgmaxOptions& opt = {}) {
  if (graphs.empty()) throw std::invalid_argument("argmax_over: empty graph stream");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> values(graphs.size());
  parallel_for(
      graphs.size(), [&](std::size_t i) { values[i] = objective(graphs[i]); }, opt.threads);

  const double best = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (values[i] >= best - tie_tol) tied.push_back(i);
  std::stable_sort(tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  // Drop isomorphic duplicates.
  std::vector<std::pair<CanonicalForm, std::size_t>> cands;
  for (auto i : tied) {
    auto form = canonical_form(graphs[i]);
    if (std::none_of(cands.begin(), cands.end(), [&](auto& c) { return c.first == form; }))
      cands.emplace_back(std::move(form), i);
  }

  EnumReport r;
  r.family = opt.family;
  r.n = opt.n != 0 ? opt.n : graphs.front().n();
  r.count = static_cast<long>(graphs.size());
  r.best_value = best;

  if constexpr (ShiftedSpectralObjective<Obj>) {
    if (cands.size() > 1) {
      r.escalated = true;
      std::size_t lead = 0;
      for (std::size_t k = 1; k < cands.size(); ++k)
        if (detail::compare_precise(graphs[cands[k].second], graphs[cands[lead].second], objective) > 0) lead = k;
      std::vector<std::pair<CanonicalForm, std::size_t>> kept{cands[lead]};
      for (std::size_t k = 0; k < cands.size(); ++k) {
        if (k == lead) continue;
        if (detail::compare_precise(graphs[cands[lead].second], graphs[cands[k].second], objective) == 0)
          kept.push_back(cands[k]);
      }
      cands = std::move(kept);
      r.best_value = values[cands.front().second];
    }
  }

  for (auto& [form, i] : cands) {
    r.argmax.push_back(form);
    r.argmax_graphs.push_back(graphs[i]);
  }
  r.matches_conjecture = r.argmax_graphs.size() == 1 && opt.conjecture && opt.conjecture(r.argmax_graphs.front());
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace spectra
