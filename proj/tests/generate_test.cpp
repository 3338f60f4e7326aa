#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "oracles.hpp"
#include "spectra/canonical.hpp"
#include "spectra/generate.hpp"

using namespace spectra;

namespace {

std::set<std::uint64_t> codes_of(const std::vector<Graph>& graphs) {
  std::set<std::uint64_t> out;
  for (const auto& g : graphs) out.insert(oracle::naive_canonical_code(g));
  return out;
}

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const auto& g : graphs) out.insert(canonical_form(g));
  return out;
}

bool connected_pred(const Graph& g) { return oracle::connected_bfs(g); }

}  // namespace

TEST(GenAll, SmallCounts) {
  EXPECT_EQ(gen_all(5, [](const Graph& g) { return is_connected(g); }).size(), 21U);
  EXPECT_EQ(oracle::naive_classes(5, connected_pred).size(), 21U);
  EXPECT_EQ(gen_all(4, nullptr).size(), 11U);
  auto tf_conn = [](const Graph& g) { return triangle_free(g) && is_connected(g); };
  auto oracle_tf_conn = [](const Graph& g) {
    for (int a = 0; a < g.n(); ++a)
      for (int b = a + 1; b < g.n(); ++b)
        for (int c = b + 1; c < g.n(); ++c)
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return false;
    return oracle::connected_bfs(g);
  };
  EXPECT_EQ(gen_all(3, tf_conn).size(), oracle::naive_classes(3, oracle_tf_conn).size());
  EXPECT_EQ(gen_all(3, tf_conn).size(), 1U);  // P3 only
}

TEST(GenAll, MatchesBruteForceClassByClassUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(codes_of(gen_all(n, nullptr)), oracle::naive_classes(n, nullptr)) << "n=" << n;
    EXPECT_EQ(codes_of(gen_all(n, connected_pred)), oracle::naive_classes(n, connected_pred)) << "n=" << n;
  }
}

TEST(GenAll, SevenVerticesOrbitSumCertifiesCompleteness) {
  // Pairwise non-isomorphic classes whose orbit sizes n!/|Aut| add up to the
  // number of labeled graphs cover every labeled graph exactly once.
  const auto graphs = gen_all(7, nullptr);
  EXPECT_EQ(codes_of(graphs).size(), graphs.size());
  long long total = 0;
  for (const auto& g : graphs) total += 5040 / oracle::automorphism_count(g);
  EXPECT_EQ(total, 1LL << 21);
}

TEST(GenAll, KnownCountsUpTo8) {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> conn{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(gen_all(n, nullptr).size(), all[n - 1]);
    EXPECT_EQ(gen_all(n, [](const Graph& g) { return is_connected(g); }).size(), conn[n - 1]);
  }
}

TEST(GenAll, DeterministicAndSorted) {
  GenOptions one;
  one.threads = 1;
  GenOptions many;
  many.threads = 4;
  auto a = gen_all(7, nullptr, one);
  auto b = gen_all(7, nullptr, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]);
  for (std::size_t i = 1; i < a.size(); ++i) ASSERT_LT(graph6_encode(a[i - 1]), graph6_encode(a[i]));
  for (const auto& g : a) ASSERT_EQ(graph6_encode(g), canonical_form(g).bytes);
}

TEST(GenAll, StreamingVisitsSameClasses) {
  std::vector<Graph> streamed;
  for_each_graph(6, nullptr, [&](const Graph& g) { streamed.push_back(g); });
  EXPECT_EQ(forms_of(streamed), forms_of(gen_all(6, nullptr)));
  EXPECT_EQ(streamed.size(), 156U);
}

TEST(GenAll, CapAndArgumentErrors) {
  EXPECT_THROW(gen_all(11, nullptr), CapExceeded);
  EXPECT_THROW(gen_all(0, nullptr), std::invalid_argument);
  GenOptions small;
  small.cap = 5;
  EXPECT_THROW(gen_all(6, nullptr, small), CapExceeded);
  EXPECT_THROW(gen_planar_triangulations(13), CapExceeded);
  EXPECT_THROW(gen_planar_triangulations(3), std::invalid_argument);
  EXPECT_THROW(gen_maximal_outerplanar(15), CapExceeded);
  EXPECT_THROW(gen_maximal_outerplanar(2), std::invalid_argument);
}

TEST(GenAll, Graph6RoundTripOnEnumeratedGraphs) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : gen_all(n, nullptr)) ASSERT_EQ(graph6_decode(graph6_encode(g)), g);
}

TEST(GenAll, SpillToGraph6File) {
  const auto path = (std::filesystem::temp_directory_path() / "spectra_spill_test.g6").string();
  const auto graphs = gen_all(5, nullptr);
  write_graph6_file(path, graphs);
  const auto back = read_graph6_file(path);
  std::remove(path.c_str());
  ASSERT_EQ(back.size(), graphs.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], graphs[i]);
}

TEST(GraphCore, JoinCommutesUpToIsomorphism) {
  std::vector<Graph> small;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : gen_all(n, nullptr)) small.push_back(g);
  for (const auto& g : small)
    for (const auto& h : small) ASSERT_EQ(canonical_form(join(g, h)), canonical_form(join(h, g)));
}

TEST(GraphCore, CutCountIdentityExhaustive) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : gen_all(n, nullptr))
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        VertexSet x(n);
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1U) x.insert(v);
        const auto a = cut_counts(g, x, x.complement());
        const auto b = cut_counts(g, x.complement(), x);
        int deg_x = 0;
        for (int v : x.members()) deg_x += g.degree(v);
        ASSERT_EQ(2 * a.within_x + a.between, deg_x);
        ASSERT_EQ(a.between, b.between);
        ASSERT_EQ(a.within_x + a.between + b.within_x, g.m());
      }
}

TEST(Triangulations, SmallCounts) {
  EXPECT_EQ(gen_planar_triangulations(4).size(), 1U);
  EXPECT_EQ(canonical_form(gen_planar_triangulations(4)[0]), canonical_form(complete_graph(4)));
  const auto five = gen_planar_triangulations(5);
  ASSERT_EQ(five.size(), 1U);
  EXPECT_TRUE(isomorphic(five[0], without_edge(complete_graph(5), 0, 1)));
  EXPECT_EQ(forms_of(five), forms_of(gen_planar_triangulations_by_filter(5)));
}

TEST(Triangulations, DualPathAgreementUpTo9) {
  for (int n = 4; n <= 9; ++n) {
    const auto split = gen_planar_triangulations(n);
    const auto filter = gen_planar_triangulations_by_filter(n);
    EXPECT_EQ(forms_of(split), forms_of(filter)) << "n=" << n;
    EXPECT_EQ(split.size(), filter.size());
    for (const auto& g : split) ASSERT_TRUE(is_maximal_planar(g));
  }
}

TEST(Triangulations, KnownCountsUpTo12) {
  const std::vector<std::size_t> expect{1, 1, 2, 5, 14, 50, 233, 1249, 7595};
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(gen_planar_triangulations(n).size(), expect[n - 4]) << "n=" << n;
}

TEST(MaximalOuterplanar, SmallCountsAndFilterAgreement) {
  EXPECT_EQ(gen_maximal_outerplanar(4).size(), 1U);
  EXPECT_EQ(gen_maximal_outerplanar(5).size(), 1U);
  for (int n = 3; n <= 9; ++n) {
    const auto ears = gen_maximal_outerplanar(n);
    EXPECT_EQ(forms_of(ears), forms_of(gen_maximal_outerplanar_by_filter(n))) << "n=" << n;
    for (const auto& g : ears) ASSERT_TRUE(is_maximal_outerplanar(g));
  }
  const auto six = gen_maximal_outerplanar(6);
  EXPECT_EQ(codes_of(six), oracle::naive_classes(6, [](const Graph& g) {
              return g.m() == 9 && oracle::outerplanar_by_minors(g) && oracle::connected_bfs(g);
            }));
}

TEST(MaximalOuterplanar, ContainsCandidate) {
  EXPECT_EQ(forms_of(gen_maximal_outerplanar(9)).count(canonical_form(build(FamilySpec::outerplanar_candidate(9)))),
            1U);
}

TEST(MaximalOuterplanar, KnownCountsUpTo14) {
  const std::vector<std::size_t> expect{1, 1, 1, 3, 4, 12, 27, 82, 228, 733, 2282, 7528};
  for (int n = 3; n <= 14; ++n) EXPECT_EQ(gen_maximal_outerplanar(n).size(), expect[n - 3]) << "n=" << n;
}
