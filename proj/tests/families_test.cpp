#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spectra/families.hpp"
#include "spectra/spectral.hpp"
#include "spectra/topology.hpp"

using namespace spectra;

TEST(Build, Candidates) {
  Graph p = build(FamilySpec::planar_candidate(9));
  EXPECT_EQ(p.n(), 9);
  EXPECT_EQ(p.m(), 21);
  EXPECT_TRUE(is_maximal_planar(p));
  Graph o = build(FamilySpec::outerplanar_candidate(9));
  EXPECT_EQ(o.n(), 9);
  EXPECT_EQ(o.m(), 15);
  EXPECT_TRUE(is_maximal_outerplanar(o));
}

TEST(Build, Pineapple) {
  Graph g = pineapple_graph(3, 2);
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.m(), 5);
  std::vector<int> deg;
  for (int v = 0; v < 5; ++v) deg.push_back(g.degree(v));
  std::sort(deg.rbegin(), deg.rend());
  EXPECT_EQ(deg, (std::vector<int>{4, 2, 2, 1, 1}));
  EXPECT_EQ(build(FamilySpec::pineapple(3, 2)), g);
}

TEST(Build, RejectsInvalidSpecs) {
  EXPECT_THROW(build(FamilySpec::planar_candidate(3)), std::invalid_argument);
  EXPECT_THROW(build(FamilySpec::pineapple(1, 3)), std::invalid_argument);
  EXPECT_THROW(build(FamilySpec::pineapple(3, -1)), std::invalid_argument);
  EXPECT_THROW(build(FamilySpec::cycle(2)), std::invalid_argument);
  EXPECT_THROW(build({FamilyKind::path, {}}), std::invalid_argument);
  EXPECT_THROW(family_kind_from_string("wheel"), std::invalid_argument);
}

TEST(ClosedForm, KnownValues) {
  EXPECT_NEAR(lambda1_closed(FamilySpec::complete_bipartite(2, 7)), std::sqrt(14.0), 1e-15);
  EXPECT_NEAR(lambda1_closed(FamilySpec::star(9)), std::sqrt(8.0), 1e-15);
  const double pa = lambda1_closed(FamilySpec::pineapple(5, 4));
  EXPECT_NEAR(pa, dense_leading_eig(pineapple_graph(5, 4)).lambda1, 1e-9);
  EXPECT_THROW(lambda1_closed(FamilySpec::planar_candidate(9)), NoClosedForm);
  EXPECT_THROW(lambda1_closed(FamilySpec::outerplanar_candidate(9)), NoClosedForm);
}

TEST(ClosedForm, DegeneratePineapples) {
  for (int m = 2; m <= 12; ++m) EXPECT_NEAR(pineapple_lambda1(m, 0), m - 1, 1e-12);
  for (int q = 0; q <= 12; ++q) EXPECT_NEAR(pineapple_lambda1(2, q), std::sqrt(q + 1.0), 1e-12);
}

TEST(ClosedForm, AgreesWithEigensolverUpTo20Vertices) {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= 20; ++n) {
    specs.push_back(FamilySpec::path(n));
    specs.push_back(FamilySpec::complete(n));
    specs.push_back(FamilySpec::star(n));
    if (n >= 3) specs.push_back(FamilySpec::cycle(n));
  }
  for (int a = 1; a <= 19; ++a)
    for (int b = a; a + b <= 20; ++b) specs.push_back(FamilySpec::complete_bipartite(a, b));
  for (int m = 2; m <= 20; ++m)
    for (int q = 0; m + q <= 20; ++q) specs.push_back(FamilySpec::pineapple(m, q));
  for (const auto& s : specs) {
    const Graph g = build(s);
    ASSERT_NEAR(lambda1_closed(s), spectral_radius(g), 1e-9) << to_string(s.kind);
    ASSERT_NEAR(lambda1_closed(s), dense_leading_eig(g).lambda1, 1e-9) << to_string(s.kind);
  }
}

TEST(ClosedForm, PineappleInterlacingBound) {
  for (int p = 2; p <= 15; ++p)
    for (int q = 0; q <= 15; ++q) ASSERT_GE(pineapple_lambda1(p, q), p - 1.0);
}

TEST(ClosedForm, PineapplePartitionIsEquitable) {
  for (int m = 2; m <= 10; ++m)
    for (int q = 0; q <= 10; ++q) {
      const Graph g = pineapple_graph(m, q);
      // Classes: apex 0, other clique vertices 1..m-1, pendants m..m+q-1.
      auto cls = [&](int v) { return v == 0 ? 0 : v < m ? 1 : 2; };
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          int expect = -1;
          for (int v = 0; v < g.n(); ++v) {
            if (cls(v) != a) continue;
            int cnt = 0;
            for (int w = 0; w < g.n(); ++w) cnt += g.has_edge(v, w) && cls(w) == b;
            if (expect < 0) expect = cnt;
            ASSERT_EQ(cnt, expect);
          }
        }
    }
}

TEST(ClosedForm, CandidateLowerBounds) {
  for (int n = 9; n <= 40; ++n) {
    EXPECT_GT(spectral_radius(build(FamilySpec::planar_candidate(n))), std::sqrt(2.0 * n - 4));
    EXPECT_GT(spectral_radius(build(FamilySpec::outerplanar_candidate(n))), std::sqrt(n - 1.0));
    EXPECT_LT(spectral_radius(build(FamilySpec::planar_candidate(n))), std::sqrt(6.0 * n));
  }
}

TEST(BestClique, HalfPlusOneAt20And21) {
  EXPECT_EQ(pineapple_best_clique(20).m_star, 11);
  EXPECT_EQ(pineapple_best_clique(21).m_star, 12);
}

TEST(BestClique, ScanAgreesWithDenseEigensolve) {
  for (int n = 3; n <= 16; ++n) {
    int best_m = 2;
    double best = -1e300;
    for (int m = 2; m <= n; ++m) {
      const Graph g = pineapple_graph(m, n - m);
      const double v = dense_leading_eig(g).lambda1 - 2.0 * g.m() / n;
      if (v > best + 1e-12) {
        best = v;
        best_m = m;
      }
    }
    EXPECT_EQ(pineapple_best_clique(n).m_star, best_m) << "n=" << n;
    EXPECT_NEAR(pineapple_best_clique(n).objective, best, 1e-9);
  }
  EXPECT_THROW(pineapple_best_clique(2), std::invalid_argument);
}

TEST(AsPineapple, RecognizesShapes) {
  auto s = as_pineapple(relabel(pineapple_graph(5, 3), std::vector<int>{7, 3, 1, 0, 2, 4, 6, 5}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->clique, 5);
  EXPECT_EQ(s->pendants, 3);
  s = as_pineapple(complete_bipartite_graph(1, 5));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->clique, 2);
  EXPECT_EQ(as_pineapple(complete_graph(4))->clique, 4);
  EXPECT_FALSE(as_pineapple(path_graph(5)));
  EXPECT_FALSE(as_pineapple(cycle_graph(4)));
  EXPECT_FALSE(as_pineapple(disjoint_union(complete_graph(3), path_graph(2))));
  // Pendants split across two clique vertices.
  EXPECT_FALSE(as_pineapple(from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {1, 5}})));
}

TEST(AsPineapple, AgreesWithIsomorphismOracle) {
  // Exhaustive at n = 6: g is a pineapple iff it is isomorphic to some PA(m, 6-m).
  for (std::uint64_t mask = 0; mask < (1U << 15); mask += 7) {
    Graph g = oracle::labeled_graph(6, mask);
    bool any = false;
    for (int m = 2; m <= 6 && !any; ++m) any = oracle::brute_isomorphic(g, pineapple_graph(m, 6 - m));
    ASSERT_EQ(as_pineapple(g).has_value(), any) << mask;
  }
}
