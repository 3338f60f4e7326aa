#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "spectra/argmax.hpp"
#include "spectra/generate.hpp"
#include "spectra/topology.hpp"
#include "spectra/verify.hpp"

using namespace spectra;

namespace {

// Objective rounded to one decimal so distinct graphs collide; the precise
// comparison must still separate them.
struct Coarse {
  double offset(const Graph&) const { return 0.0; }
  double operator()(const Graph& g) const { return std::round(leading_eig(g).lambda1 * 10.0) / 10.0; }
};

double oracle_lambda(const Graph& g) { return static_cast<double>(oracle::largest_eigenvalue_ld(g, 20000)); }

}  // namespace

TEST(Argmax, EmptyStreamThrows) {
  std::vector<Graph> none;
  EXPECT_THROW(argmax_over(std::span<const Graph>(none), SpectralObjective{}), std::invalid_argument);
}

TEST(Argmax, ConnectedFiveIsComplete) {
  auto graphs = gen_all(5, [](const Graph& g) { return is_connected(g); });
  auto r = argmax_over(std::span<const Graph>(graphs), SpectralObjective{});
  ASSERT_EQ(r.argmax.size(), 1U);
  EXPECT_EQ(r.argmax.front(), canonical_form(complete_graph(5)));
  EXPECT_NEAR(r.best_value, 4.0, 1e-12);
  EXPECT_EQ(r.count, 21);
  EXPECT_FALSE(r.escalated);
}

TEST(Argmax, IsomorphicCopiesCollapse) {
  const Graph k = complete_graph(4);
  std::vector<Graph> graphs{path_graph(4), k, relabel(k, std::vector<int>{3, 1, 0, 2}), cycle_graph(4)};
  auto r = argmax_over(std::span<const Graph>(graphs), SpectralObjective{});
  EXPECT_EQ(r.argmax.size(), 1U);
  EXPECT_FALSE(r.escalated);
}

TEST(Argmax, ExactTieBetweenNonIsomorphicGraphsIsReported) {
  // The path on five vertices and the claw both have largest eigenvalue sqrt 3.
  std::vector<Graph> graphs{path_graph(5), complete_bipartite_graph(1, 3), path_graph(3)};
  auto r = argmax_over(std::span<const Graph>(graphs), SpectralObjective{});
  EXPECT_TRUE(r.escalated);
  EXPECT_EQ(r.argmax.size(), 2U);
  EXPECT_NEAR(r.best_value, std::sqrt(3.0), 1e-12);
}

TEST(Argmax, NearTieIsResolvedByEscalation) {
  std::vector<Graph> graphs{path_graph(11), path_graph(10), path_graph(4)};
  auto r = argmax_over(std::span<const Graph>(graphs), Coarse{});
  EXPECT_TRUE(r.escalated);
  ASSERT_EQ(r.argmax.size(), 1U);
  EXPECT_EQ(r.argmax_graphs.front(), path_graph(11));
}

TEST(Argmax, ThreadCountDoesNotChangeResult) {
  auto graphs = gen_all(7, [](const Graph& g) { return is_connected(g); });
  ArgmaxOptions one;
  one.threads = 1;
  ArgmaxOptions many;
  many.threads = 6;
  auto a = argmax_over(std::span<const Graph>(graphs), SpectralObjective{ObjectiveKind::irregularity}, kTieTol, one);
  auto b = argmax_over(std::span<const Graph>(graphs), SpectralObjective{ObjectiveKind::irregularity}, kTieTol, many);
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_EQ(a.best_value, b.best_value);
}

TEST(VerifyPlanar, CandidateWinsAtNineAndTen) {
  for (int n : {9, 10}) {
    auto r = verify(Conjecture::planar, n).report;
    EXPECT_TRUE(r.matches_conjecture) << n;
    ASSERT_EQ(r.argmax.size(), 1U);
    EXPECT_EQ(r.argmax.front(), canonical_form(build(FamilySpec::planar_candidate(n))));
  }
  // Independent check of the n = 9 maximum with a long double power iteration.
  double best = 0.0;
  for (const auto& g : gen_planar_triangulations(9)) best = std::max(best, oracle_lambda(g));
  EXPECT_NEAR(verify(Conjecture::planar, 9).report.best_value, best, 1e-9);
  EXPECT_NEAR(best, oracle_lambda(build(FamilySpec::planar_candidate(9))), 1e-9);
}

TEST(VerifyPlanar, CandidateLosesAtSevenAndEight) {
  for (int n : {7, 8}) {
    auto r = verify(Conjecture::planar, n).report;
    EXPECT_FALSE(r.matches_conjecture) << n;
    EXPECT_GT(r.best_value, oracle_lambda(build(FamilySpec::planar_candidate(n))) + 1e-6) << n;
  }
}

TEST(VerifyPlanar, RestrictingToTriangulationsIsSound) {
  // Adding an edge raises lambda1, so the planar maximum sits on a triangulation.
  for (int n = 4; n <= 8; ++n) {
    auto planar = gen_all(n, [](const Graph& g) { return is_planar(g) && is_connected(g); });
    auto all = argmax_over(std::span<const Graph>(planar), SpectralObjective{});
    auto tri = verify(Conjecture::planar, n).report;
    EXPECT_EQ(all.argmax, tri.argmax) << "n=" << n;
    EXPECT_NEAR(all.best_value, tri.best_value, 1e-12);
  }
}

TEST(VerifyOuterplanar, CandidateWinsExceptAtSix) {
  for (int n = 4; n <= 11; ++n) {
    auto r = verify(Conjecture::outerplanar, n).report;
    EXPECT_EQ(r.matches_conjecture, n != 6) << "n=" << n;
  }
  auto six = verify(Conjecture::outerplanar, 6).report;
  EXPECT_NEAR(six.best_value, 1.0 + std::sqrt(5.0), 1e-9);
}

TEST(VerifyOuterplanar, RestrictingToMaximalIsSound) {
  for (int n = 3; n <= 8; ++n) {
    auto outer = gen_all(n, [](const Graph& g) { return oracle::outerplanar_by_minors(g) && is_connected(g); });
    auto all = argmax_over(std::span<const Graph>(outer), SpectralObjective{});
    EXPECT_EQ(all.argmax, verify(Conjecture::outerplanar, n).report.argmax) << "n=" << n;
  }
}

TEST(VerifyPineapple, ArgmaxIsAPineappleAndDominates) {
  for (int n = 5; n <= 8; ++n) {
    auto v = verify(Conjecture::pineapple, n);
    ASSERT_TRUE(v.pineapple);
    EXPECT_TRUE(v.pineapple->is_pineapple) << n;
    EXPECT_TRUE(v.pineapple->dominates_pineapples) << n;
    EXPECT_EQ(v.pineapple->clique_size, v.pineapple->m_star) << n;
    EXPECT_NEAR(v.report.best_value, v.pineapple->best_pineapple_value, 1e-9);
  }
  EXPECT_EQ(verify(Conjecture::pineapple, 8).pineapple->clique_size, 5);
}

TEST(Verify, ArgumentErrors) {
  EXPECT_THROW(verify(Conjecture::planar, 3), std::invalid_argument);
  EXPECT_THROW(verify(Conjecture::outerplanar, 2), std::invalid_argument);
  EXPECT_THROW(verify(Conjecture::planar, 12, kTieTol, 11), CapExceeded);
  EXPECT_THROW(conjecture_from_string("toroidal"), std::invalid_argument);
}
