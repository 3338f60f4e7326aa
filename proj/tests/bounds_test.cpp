#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "spectra/bounds.hpp"
#include "spectra/generate.hpp"

using namespace spectra;

TEST(Stanley, Values) {
  EXPECT_DOUBLE_EQ(stanley_bound(10), 4.0);
  EXPECT_DOUBLE_EQ(stanley_bound(3), 2.0);
  EXPECT_DOUBLE_EQ(stanley_bound(0), 0.0);
  EXPECT_THROW(stanley_bound(-1), std::invalid_argument);
}

TEST(Hong, Values) {
  EXPECT_DOUBLE_EQ(hong_bound(complete_graph(5)), 4.0);
  EXPECT_DOUBLE_EQ(hong_bound(path_graph(4)), std::sqrt(3.0));
  EXPECT_GE(hong_bound(path_graph(4)), leading_eig(path_graph(4)).lambda1);
  EXPECT_NEAR(hong_bound(complete_bipartite_graph(1, 8)), leading_eig(complete_bipartite_graph(1, 8)).lambda1, 1e-10);
  EXPECT_THROW(hong_bound(empty_graph(3)), std::invalid_argument);
}

TEST(WalkBound, Examples) {
  auto star = complete_bipartite_graph(1, 8);
  auto w = walk_bound(star, leading_eig(star));
  EXPECT_DOUBLE_EQ(w.rhs, 8.0);
  EXPECT_NEAR(w.lhs, 8.0, 1e-10);
  auto k4 = complete_graph(4);
  w = walk_bound(k4, leading_eig(k4));
  EXPECT_DOUBLE_EQ(w.rhs, 9.0);
  EXPECT_NEAR(w.lhs, 9.0, 1e-10);
  auto c5 = cycle_graph(5);
  w = walk_bound(c5, leading_eig(c5));
  EXPECT_DOUBLE_EQ(w.rhs, 4.0);
  EXPECT_NEAR(w.lhs, 4.0, 1e-10);
}

TEST(WalkBound, RejectsForeignCertificate) {
  auto cert = leading_eig(complete_graph(4));
  EXPECT_THROW(walk_bound(path_graph(4), cert), std::invalid_argument);
  EXPECT_THROW(walk_bound(path_graph(5), cert), std::invalid_argument);
}

TEST(Mantel, Examples) {
  auto r = mantel_check(cycle_graph(5));
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.passes);
  EXPECT_FALSE(r.extremal);
  r = mantel_check(complete_bipartite_graph(2, 2));
  EXPECT_TRUE(r.applicable && r.passes && r.extremal && r.structural);
  EXPECT_FALSE(mantel_check(complete_graph(3)).applicable);
}

TEST(CheckAll, Examples) {
  auto k5 = check_all(complete_graph(5));
  EXPECT_TRUE(k5.ok());
  EXPECT_NEAR(k5.lambda1, k5.stanley_rhs, 1e-9);
  EXPECT_NEAR(k5.lambda1, k5.hong_rhs, 1e-9);
  EXPECT_NEAR(k5.walk_bound_lhs, k5.walk_bound_rhs, 1e-9);
  EXPECT_TRUE(k5.stanley_equality);

  auto cand = check_all(build(FamilySpec::planar_candidate(9)));
  EXPECT_TRUE(cand.ok());
  EXPECT_DOUBLE_EQ(cand.avg_degree, 42.0 / 9.0);
  EXPECT_GT(cand.lambda1, cand.avg_degree);
  EXPECT_LT(cand.lambda1, cand.stanley_rhs);

  auto c4 = check_all(cycle_graph(4));
  EXPECT_TRUE(c4.ok());
  EXPECT_TRUE(c4.mantel_applicable);
  EXPECT_TRUE(c4.mantel_extremal);
  EXPECT_THROW(check_all(empty_graph(2)), std::invalid_argument);
}

TEST(CheckAll, NoViolationsOnConnectedGraphsUpTo8) {
  for (int n = 1; n <= 8; ++n)
    for_each_graph(n, [](const Graph& g) { return is_connected(g); }, [](const Graph& g) {
      auto r = check_all(g);
      ASSERT_TRUE(r.ok()) << graph6_encode(g) << " " << r.violations.front();
    });
}

// Oracle for the equality structure: every vertex of nonzero degree has
// degree k-1 where k is the number of such vertices.
static bool clique_plus_isolated_oracle(const Graph& g) {
  int k = 0;
  for (int v = 0; v < g.n(); ++v) k += g.degree(v) > 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0 && g.degree(v) != k - 1) return false;
  return true;
}

TEST(Stanley, EqualityExactlyForCliquePlusIsolated) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : gen_all(n, nullptr)) {
      const bool equal = std::abs(spectral_radius(g) - stanley_bound(g.m())) < 1e-9;
      ASSERT_EQ(equal, clique_plus_isolated_oracle(g)) << graph6_encode(g);
      ASSERT_EQ(is_clique_plus_isolated(g), clique_plus_isolated_oracle(g));
    }
}

TEST(Mantel, EqualityExactlyForBalancedCompleteBipartite) {
  for (int n = 1; n <= 8; ++n) {
    int extremal = 0;
    for (const auto& g : gen_all(n, nullptr)) {
      auto r = mantel_check(g);
      if (!r.applicable) continue;
      ASSERT_TRUE(r.passes);
      if (r.extremal) {
        ++extremal;
        ASSERT_TRUE(r.structural);
        ASSERT_TRUE(oracle::brute_isomorphic(g, oracle::k_ab(n / 2, n - n / 2)));
      }
    }
    EXPECT_EQ(extremal, 1) << "n=" << n;
  }
}
