#include <gtest/gtest.h>

#include <map>

#include "kopt/error.hpp"
#include "kopt/extremal.hpp"
#include "kopt/random_instances.hpp"
#include "oracles.hpp"

using namespace kopt;

TEST(Girth, CycleTreeAndPetersen) {
  EXPECT_EQ(girth(oracle::cycle(5)), 5);
  EXPECT_EQ(girth(oracle::path(7)), std::nullopt);
  EXPECT_EQ(girth(oracle::petersen()), 5);
  EXPECT_EQ(oracle::girth_by_edge_deletion(oracle::petersen()), 5);
}

TEST(Girth, AgreesWithEdgeDeletionOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = random_connected_graph(6 + trial % 10, 8 + trial % 20, rng);
    EXPECT_EQ(girth(g), oracle::girth_by_edge_deletion(g)) << "trial " << trial;
  }
}

TEST(ExBruteforce, SmallValues) {
  EXPECT_EQ(ex_bruteforce(3, 4).edges, 2);
  EXPECT_EQ(ex_bruteforce(5, 4).edges, 6);
  EXPECT_EQ(ex_bruteforce(6, 6).edges, 6);
}

TEST(ExBruteforce, TriangleFreeMaximum) {
  for (int n = 3; n <= 9; ++n) {
    const ExtremalGraph ex = ex_bruteforce(n, 4);
    EXPECT_EQ(ex.edges, n * n / 4) << "n=" << n;
    EXPECT_EQ(ex.witness.num_edges(), ex.edges);
    const auto g = girth(ex.witness);
    EXPECT_TRUE(!g || *g >= 4);
  }
}

TEST(ExBruteforce, WitnessRespectsGirth) {
  for (int n = 4; n <= 9; ++n) {
    const ExtremalGraph ex = ex_bruteforce(n, 6);
    const auto g = girth(ex.witness);
    EXPECT_TRUE(!g || *g >= 6);
  }
  EXPECT_THROW(ex_bruteforce(10, 4), InvalidInput);
}

TEST(ExBruteforce, MatchesPlainEnumerationOnSixVertices) {
  // All 2^15 labeled graphs on 6 vertices.
  const std::vector<Edge> pairs = oracle::complete(6).edges();
  std::map<int, int> best;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(pairs[i]);
    const auto g = girth(SimpleGraph::from_edges(6, chosen));
    for (int bound : {3, 4, 5, 6}) {
      if (!g || *g >= bound) best[bound] = std::max(best[bound], static_cast<int>(chosen.size()));
    }
  }
  for (int bound : {3, 4, 5, 6}) EXPECT_EQ(ex_bruteforce(6, bound).edges, best[bound]);
}

TEST(AlonBound, CatalogCagesSatisfyIt) {
  for (const CageEntry& entry : cage_catalog()) {
    const SimpleGraph g = *load_cage(entry.degree, entry.girth);
    const int k = entry.girth / 2;
    EXPECT_TRUE(alon_bound_holds(g.num_vertices(), g.num_edges(), k)) << entry.file;
  }
  // K_{4,4} has girth 4 and 16 edges; the bound for k=2 is 8^2/4 + 4 = 20.
  EXPECT_TRUE(alon_bound_holds(8, 16, 2));
  EXPECT_FALSE(alon_bound_holds(8, 20, 2));
}

TEST(RegularHighGirth, CycleForDegreeTwo) {
  const SimpleGraph g = regular_high_girth(2, 5, 1);
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(girth(g), 5);
}

TEST(RegularHighGirth, PetersenFromCatalog) {
  const SimpleGraph g = regular_high_girth(3, 5, 1);
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_EQ(girth(g), 5);
}

TEST(RegularHighGirth, BipartiteFourSixCage) {
  const SimpleGraph g = regular_high_girth(4, 6, 1);
  EXPECT_EQ(g.num_vertices(), 26);
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_EQ(girth(g), 6);
}

TEST(RegularHighGirth, CatalogIsVerified) {
  for (const CageEntry& entry : cage_catalog()) {
    const SimpleGraph g = regular_high_girth(entry.degree, entry.girth, 0);
    EXPECT_EQ(g.num_vertices(), entry.vertices);
    EXPECT_EQ(g.regular_degree(), entry.degree);
    EXPECT_EQ(girth(g), entry.girth);
  }
}

TEST(RegularHighGirth, RandomRepairReachesGirth) {
  for (auto [d, g] : std::vector<std::pair<int, int>>{{3, 4}, {3, 6}, {4, 5}, {5, 4}}) {
    const SimpleGraph graph = regular_high_girth(d, g, 7);
    EXPECT_EQ(graph.regular_degree(), d);
    const auto achieved = girth(graph);
    EXPECT_TRUE(!achieved || *achieved >= g) << d << "," << g;
    EXPECT_LE(graph.num_vertices(), existence_vertex_bound(d, g));
  }
}

TEST(RegularHighGirth, DeterministicForSeed) {
  EXPECT_EQ(regular_high_girth(3, 6, 42), regular_high_girth(3, 6, 42));
}

TEST(RegularHighGirth, ExhaustedBudgetReportsBestGirth) {
  try {
    regular_high_girth(3, 9, 1, 10);
    FAIL() << "expected budget exhaustion";
  } catch (const GirthSearchExhausted& e) {
    EXPECT_GE(e.best_girth(), 0);
  }
}

TEST(DoubleCover, SmallCases) {
  const SimpleGraph k2 = bipartite_double_cover(oracle::complete(2));
  EXPECT_EQ(k2.num_vertices(), 4);
  EXPECT_EQ(k2.num_edges(), 2);
  const SimpleGraph c6 = bipartite_double_cover(oracle::cycle(3));
  EXPECT_EQ(girth(c6), 6);
  EXPECT_TRUE(is_bipartite(c6));
  EXPECT_EQ(c6.regular_degree(), 2);
}

TEST(DoubleCover, PetersenGivesDesargues) {
  const SimpleGraph d = bipartite_double_cover(oracle::petersen());
  EXPECT_EQ(d.num_vertices(), 20);
  EXPECT_EQ(d.regular_degree(), 3);
  EXPECT_TRUE(is_bipartite(d));
  EXPECT_EQ(girth(d), 6);
  EXPECT_THROW(bipartite_double_cover(oracle::path(3)), InvalidInput);
}

TEST(DoubleCover, CyclesProjectToClosedWalks) {
  const SimpleGraph base = oracle::petersen();
  const SimpleGraph cover = bipartite_double_cover(base);
  const int n = base.num_vertices();
  for (const Edge& e : cover.edges()) {
    EXPECT_TRUE(base.has_edge(e.u % n, e.v % n));
    EXPECT_NE(e.u < n, e.v < n);
  }
}

TEST(EulerianSubgraph, CycleIsItsOwnAnswer) {
  const EulerianSubgraph out = eulerian_subgraph(oracle::cycle(4));
  EXPECT_EQ(out.graph.num_vertices(), 4);
  EXPECT_EQ(out.graph.num_edges(), 4);
}

TEST(EulerianSubgraph, TreeGivesSingleVertex) {
  const EulerianSubgraph out = eulerian_subgraph(oracle::path(6));
  EXPECT_EQ(out.graph.num_vertices(), 1);
  EXPECT_EQ(out.graph.num_edges(), 0);
}

namespace {
void expect_eulerian_subgraph_properties(const SimpleGraph& g, const EulerianSubgraph& out) {
  const SimpleGraph& h = out.graph;
  for (int v = 0; v < h.num_vertices(); ++v) EXPECT_EQ(h.degree(v) % 2, 0);
  EXPECT_TRUE(is_connected(h));
  // |E'|/|V'| >= (|E|+1)/|V| - 1, cross-multiplied.
  EXPECT_GE(h.num_edges() * g.num_vertices(),
            (g.num_edges() + 1 - g.num_vertices()) * h.num_vertices());
  for (const Edge& e : h.edges()) EXPECT_TRUE(g.has_edge(out.original[e.u], out.original[e.v]));
}
}  // namespace

TEST(EulerianSubgraph, CompleteGraphRatio) {
  const SimpleGraph k5 = oracle::complete(5);
  const EulerianSubgraph out = eulerian_subgraph(k5);
  expect_eulerian_subgraph_properties(k5, out);
  // ratio >= 11/5 - 1 = 6/5
  EXPECT_GE(5 * out.graph.num_edges(), 6 * out.graph.num_vertices());
}

TEST(EulerianSubgraph, RandomGraphsSatisfyBound) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const SimpleGraph g = random_connected_graph(5 + trial % 12, 10 + trial, rng);
    expect_eulerian_subgraph_properties(g, eulerian_subgraph(g));
  }
}

namespace {
void expect_euler_walk(const SimpleGraph& g, const std::vector<int>& walk) {
  ASSERT_EQ(static_cast<std::int64_t>(walk.size()), g.num_edges());
  std::multiset<std::pair<int, int>> used;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const int a = walk[i];
    const int b = walk[(i + 1) % walk.size()];
    ASSERT_TRUE(g.has_edge(a, b));
    used.insert({std::min(a, b), std::max(a, b)});
  }
  for (const Edge& e : g.edges()) EXPECT_EQ(used.count({e.u, e.v}), 1u);
}
}  // namespace

TEST(EulerianWalk, CycleAndBowtie) {
  expect_euler_walk(oracle::cycle(4), eulerian_walk(oracle::cycle(4)));
  const SimpleGraph bowtie = SimpleGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const auto walk = eulerian_walk(bowtie);
  EXPECT_EQ(walk.size(), 6u);
  expect_euler_walk(bowtie, walk);
}

TEST(EulerianWalk, FourSixCage) {
  const SimpleGraph cage = *load_cage(4, 6);
  const auto walk = eulerian_walk(cage);
  EXPECT_EQ(walk.size(), 52u);
  expect_euler_walk(cage, walk);
}

TEST(EulerianWalk, RejectsOddOrDisconnected) {
  EXPECT_THROW(eulerian_walk(oracle::path(3)), InvalidInput);
  const SimpleGraph two = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_THROW(eulerian_walk(two), InvalidInput);
}

namespace {
void expect_proper(const SimpleGraph& g, const std::vector<int>& color) {
  const auto edges = g.edges();
  ASSERT_EQ(color.size(), edges.size());
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ASSERT_GE(color[i], 0);
    ASSERT_LT(color[i], g.max_degree());
    EXPECT_TRUE(seen.insert({edges[i].u, color[i]}).second);
    EXPECT_TRUE(seen.insert({edges[i].v, color[i]}).second);
  }
}
}  // namespace

TEST(EdgeColoring, MatchingAndEvenCycle) {
  const SimpleGraph matching = SimpleGraph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto c1 = bipartite_edge_coloring(matching);
  EXPECT_EQ(c1, (std::vector<int>{0, 0, 0}));
  const SimpleGraph c6 = oracle::cycle(6);
  const auto c2 = bipartite_edge_coloring(c6);
  expect_proper(c6, c2);
  EXPECT_THROW(bipartite_edge_coloring(oracle::cycle(5)), InvalidInput);
}

TEST(EdgeColoring, DoubleCoverOfRandomFourRegular) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const SimpleGraph base = regular_high_girth(4, 4, seed);
    const SimpleGraph cover = bipartite_double_cover(base);
    const auto color = bipartite_edge_coloring(cover);
    expect_proper(cover, color);
    EXPECT_EQ(*std::max_element(color.begin(), color.end()), 3);
  }
}

TEST(EdgeColoring, LargestCage) {
  const SimpleGraph cage = *load_cage(4, 12);
  expect_proper(cage, bipartite_edge_coloring(cage));
}
