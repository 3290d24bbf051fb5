#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "powergraph/error.hpp"
#include "powergraph/generators.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/graph_io.hpp"
#include "powergraph/graph_ops.hpp"
#include "powergraph/random.hpp"
#include "powergraph/traversal.hpp"

using namespace powergraph;
using testutil::make;
using testutil::vs;

namespace {

void expect_canonical(const Graph& g) {
  ASSERT_TRUE(g.is_canonical());
  std::size_t twice = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(v);
    twice += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      EXPECT_NE(nb[i], v);
      if (i > 0) {
        EXPECT_LT(nb[i - 1], nb[i]);
      }
      EXPECT_TRUE(g.has_edge(nb[i], v));
    }
  }
  EXPECT_EQ(twice, 2 * g.num_edges());
}

}  // namespace

TEST(Graph, FromEdgesDeduplicatesAndSorts) {
  const auto g = make(4, {{2, 1}, {1, 2}, {0, 3}, {3, 2}, {0, 3}});
  expect_canonical(g);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(make(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(make(3, {{0, 3}}), std::invalid_argument);
}

TEST(VertexSetTest, SortsAndDeduplicates) {
  const auto s = VertexSet::from_unsorted({5, 1, 3, 1});
  EXPECT_EQ(s.vector(), vs({1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_TRUE(s.within(6));
  EXPECT_FALSE(s.within(5));
}

TEST(RandomSourceTest, SameSeedSameStream) {
  RandomSource a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    (void)c.next_u64();
  }
  RandomSource d(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = d.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RandomSourceTest, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(9, 4), mix64(9 + 0x9E3779B97F4A7C15ULL * 5));
}

TEST(GnpSample, ZeroProbabilityIsEmpty) {
  RandomSource src(123);
  const auto g = gnp_sample(5, 0.0, src);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(GnpSample, UnitProbabilityIsComplete) {
  for (auto mode : {SamplingMode::Pairwise, SamplingMode::GeometricSkip}) {
    RandomSource src(99);
    const auto g = gnp_sample(5, 1.0, src, mode);
    EXPECT_EQ(g.num_edges(), 10u);
    EXPECT_EQ(g, complete_graph(5));
  }
}

TEST(GnpSample, RejectsBadProbability) {
  RandomSource src(1);
  EXPECT_THROW(gnp_sample(5, -0.1, src), std::invalid_argument);
  EXPECT_THROW(gnp_sample(5, 1.5, src), std::invalid_argument);
}

// m ~ Binomial(499500, 0.01): mean 4995, sd ~70.3; a 5 sd window is +-350.
TEST(GnpSample, EdgeCountConcentratesAcrossSeeds) {
  for (auto mode : {SamplingMode::Pairwise, SamplingMode::GeometricSkip}) {
    double sum = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      RandomSource src(seed);
      const auto g = gnp_sample(1000, 0.01, src, mode);
      expect_canonical(g);
      const double m = static_cast<double>(g.num_edges());
      EXPECT_NEAR(m, 4995.0, 350.0) << "seed " << seed;
      sum += m;
    }
    // Mean over 100 seeds has sd ~7.
    EXPECT_NEAR(sum / 100.0, 4995.0, 35.0);
  }
}

TEST(GnpSample, SameSeedSameBytes) {
  for (auto mode : {SamplingMode::Pairwise, SamplingMode::GeometricSkip}) {
    RandomSource a(2024), b(2024);
    std::ostringstream x, y;
    write_edge_list(x, gnp_sample(3000, 0.002, a, mode));
    write_edge_list(y, gnp_sample(3000, 0.002, b, mode));
    EXPECT_EQ(x.str(), y.str());
  }
}

TEST(GnpSample, PairwiseModeMatchesPairOrderContract) {
  // One draw per pair i < j in lexicographic order; edge iff draw < p.
  const std::size_t n = 40;
  const double p = 0.3;
  RandomSource src(77), ref(77);
  const auto g = gnp_sample(n, p, src, SamplingMode::Pairwise);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      EXPECT_EQ(g.has_edge(i, j), ref.uniform01() < p);
    }
  }
}

TEST(GnpSample, AutoModeResolvesByPairCount) {
  EXPECT_EQ(resolve_sampling_mode(1000, SamplingMode::Auto), SamplingMode::Pairwise);
  EXPECT_EQ(resolve_sampling_mode(100000, SamplingMode::Auto), SamplingMode::GeometricSkip);
  EXPECT_EQ(resolve_sampling_mode(100000, SamplingMode::Pairwise), SamplingMode::Pairwise);
}

TEST(GnpSample, SkipModeDegreeMeanMatches) {
  // Mean degree of G(n, d/n) is d (n - 1) / n.
  RandomSource src(5);
  const auto g = gnp_sample(200000, 3.0 / 200000, src, SamplingMode::GeometricSkip);
  const double mean = 2.0 * static_cast<double>(g.num_edges()) / 200000.0;
  EXPECT_NEAR(mean, 3.0, 0.03);  // sd of the mean ~ 0.0055
}

TEST(GraphPower, PathSquared) {
  const auto p5 = path_graph(5);
  const auto sq = graph_power(p5, 2);
  EXPECT_EQ(sq.num_edges(), 7u);
  const auto expected = make(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(sq, expected);
}

TEST(GraphPower, CycleFiveSquaredIsComplete) {
  EXPECT_EQ(graph_power(cycle_graph(5), 2), complete_graph(5));
}

TEST(GraphPower, RadiusOneIsIdentity) {
  const auto g = testutil::gnp(60, 0.08, 3);
  const auto g1 = graph_power(g, 1);
  EXPECT_EQ(g1.offsets(), g.offsets());
  EXPECT_EQ(g1.adjacency(), g.adjacency());
}

TEST(GraphPower, EdgeCapThrows) {
  EXPECT_THROW(graph_power(complete_graph(30), 1, 10), MemoryBudgetError);
  EXPECT_THROW(graph_power(path_graph(100), 3, 50), MemoryBudgetError);
}

TEST(GraphPower, MatchesDistanceOracleAndNests) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = testutil::gnp(40, 0.06, seed);
    Graph prev = g;
    for (unsigned r = 1; r <= 4; ++r) {
      const auto pw = graph_power(g, r);
      expect_canonical(pw);
      EXPECT_EQ(oracle::adjacency(pw), oracle::power_matrix(g, r));
      for (auto e : prev.edges()) EXPECT_TRUE(pw.has_edge(e.u, e.v));
      prev = pw;
    }
  }
}

TEST(GraphPower, SmallDiameterGivesComplete) {
  // Petersen graph has diameter 2; a grid 3x3 has diameter 4.
  EXPECT_EQ(graph_power(petersen_graph(), 2), complete_graph(10));
  EXPECT_EQ(graph_power(grid_graph(3, 3), 4), complete_graph(9));
  EXPECT_NE(graph_power(grid_graph(3, 3), 3), complete_graph(9));
}

TEST(InducedPower, UsesDistancesInWholeGraph) {
  // 0 and 2 are at distance 2 through 1, which is not in the set.
  const auto h = induced_power_subgraph(path_graph(5), 2, VertexSet::from_sorted({0, 2, 4}));
  EXPECT_EQ(h, make(3, {{0, 1}, {1, 2}}));
}

TEST(BfsLayers, Examples) {
  EXPECT_EQ(bfs_layers(star_graph(4), 0, 2), DegreeProfile({4, 0}));
  EXPECT_EQ(bfs_layers(path_graph(5), 0, 3), DegreeProfile({1, 1, 1}));
  EXPECT_EQ(bfs_layers(empty_graph(3), 1, 3), DegreeProfile({0, 0, 0}));
}

TEST(BfsLayers, FullDepthCoversComponent) {
  const auto g = testutil::gnp(300, 1.5 / 300, 11);
  const auto comps = connected_components(g);
  std::vector<std::size_t> size(comps.count, 0);
  for (auto l : comps.label) ++size[l];
  for (Vertex v = 0; v < g.num_vertices(); v += 7) {
    const auto prof = bfs_layers(g, v, static_cast<unsigned>(g.num_vertices()));
    EXPECT_EQ(prof.total() + 1, size[comps.label[v]]);
  }
}

TEST(BfsLayers, MatchesDistanceOracle) {
  const auto g = testutil::gnp(50, 0.05, 21);
  const auto d = oracle::distances(g);
  for (Vertex v = 0; v < 50; ++v) {
    const auto prof = bfs_layers(g, v, 4);
    for (unsigned t = 1; t <= 4; ++t) {
      const auto count = std::count(d[v].begin(), d[v].end(), t);
      EXPECT_EQ(prof.ell[t - 1], static_cast<std::uint64_t>(count));
    }
  }
}

TEST(Ball, Examples) {
  EXPECT_EQ(ball(star_graph(3), 0, 1).vector(), vs({0, 1, 2, 3}));
  EXPECT_EQ(ball(path_graph(5), 2, 1).vector(), vs({1, 2, 3}));
  EXPECT_EQ(ball(empty_graph(6), 4, 5).vector(), vs({4}));
}

TEST(NeighborhoodUnion, Examples) {
  EXPECT_TRUE(neighborhood_union(petersen_graph(), VertexSet{}, 2).empty());
  EXPECT_EQ(neighborhood_union(path_graph(5), VertexSet::from_sorted({0}), 2).vector(),
            vs({0, 1, 2}));
  EXPECT_EQ(neighborhood_union(complete_graph(4), VertexSet::from_sorted({0}), 1).vector(),
            vs({0, 1, 2, 3}));
}

TEST(NeighborhoodUnion, OpenExcludesIsolatedCenters) {
  const auto p = path_graph(7);
  const auto s = VertexSet::from_sorted({0, 1, 6});
  EXPECT_EQ(neighborhood_union(p, s, 1, Closure::Open).vector(), vs({0, 1, 2, 5}));
  EXPECT_EQ(neighborhood_union(p, s, 1, Closure::Closed).vector(), vs({0, 1, 2, 5, 6}));
}

TEST(InducedSubgraphTest, Examples) {
  const auto k4 = induced_subgraph(complete_graph(4), VertexSet::from_sorted({0, 1}));
  EXPECT_EQ(k4.graph, make(2, {{0, 1}}));
  const auto c5 = induced_subgraph(cycle_graph(5), VertexSet::all(5));
  EXPECT_EQ(c5.graph, cycle_graph(5));
  const auto p = induced_subgraph(path_graph(5), VertexSet::from_sorted({0, 2, 4}));
  EXPECT_EQ(p.graph.num_vertices(), 3u);
  EXPECT_EQ(p.graph.num_edges(), 0u);
  EXPECT_EQ(p.old_to_new[2], 1u);
  EXPECT_EQ(p.old_to_new[1], kNoVertex);
  EXPECT_EQ(p.new_to_old, vs({0, 2, 4}));
}

TEST(IsForest, Examples) {
  RandomSource src(8);
  EXPECT_TRUE(is_forest(random_tree(50, src)).is_forest);
  const auto tri = is_forest(complete_graph(3));
  EXPECT_FALSE(tri.is_forest);
  EXPECT_EQ(tri.cycle, vs({0, 1, 2}));
  const auto two_paths = testutil::disjoint_union(path_graph(4), path_graph(3));
  EXPECT_TRUE(is_forest(two_paths).is_forest);
}

TEST(IsForest, WitnessIsACycle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = testutil::gnp(60, 1.2 / 60, seed);
    const auto comps = connected_components(g);
    const auto fc = is_forest(g);
    EXPECT_EQ(fc.is_forest, g.num_edges() == g.num_vertices() - comps.count);
    if (fc.is_forest) continue;
    ASSERT_GE(fc.cycle.size(), 3u);
    EXPECT_EQ(fc.cycle.front(), *std::min_element(fc.cycle.begin(), fc.cycle.end()));
    for (std::size_t i = 0; i < fc.cycle.size(); ++i) {
      EXPECT_TRUE(g.has_edge(fc.cycle[i], fc.cycle[(i + 1) % fc.cycle.size()]));
    }
    auto sorted = fc.cycle;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
  }
}

TEST(Generators, Families) {
  EXPECT_EQ(petersen_graph().num_edges(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen_graph().degree(v), 3u);
  EXPECT_EQ(grid_graph(3, 4).num_edges(), 17u);
  EXPECT_EQ(star_graph(4).degree(0), 4u);
  RandomSource src(3);
  const auto t = random_tree(100, src);
  EXPECT_EQ(t.num_edges(), 99u);
  EXPECT_EQ(connected_components(t).count, 1u);
}

TEST(GraphIo, EdgeListRoundTrip) {
  const auto g = testutil::gnp(200, 0.02, 4);
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(GraphIo, EdgeListFormat) {
  std::ostringstream os;
  write_edge_list(os, path_graph(3));
  EXPECT_EQ(os.str(), "3 2\n0 1\n1 2\n");
}

TEST(GraphIo, DimacsRoundTripAndOneIndexing) {
  const auto g = petersen_graph();
  std::stringstream ss;
  write_dimacs(ss, g, "petersen");
  const std::string text = ss.str();
  EXPECT_NE(text.find("p edge 10 15"), std::string::npos);
  EXPECT_NE(text.find("e 1 2"), std::string::npos);
  EXPECT_EQ(read_dimacs(ss), g);
}

TEST(GraphIo, DimacsAcceptsColHeaderAndBothOrientations) {
  std::istringstream in("c test\np col 3 3\ne 2 1\ne 1 2\ne 3 2\n");
  EXPECT_EQ(read_dimacs(in), make(3, {{0, 1}, {1, 2}}));
}

TEST(GraphIo, MalformedInputThrowsIoError) {
  std::istringstream bad1("3 1\n0 7\n");
  EXPECT_THROW(read_edge_list(bad1), IoError);
  std::istringstream bad2("p edge 3 1\ne 0 1\n");
  EXPECT_THROW(read_dimacs(bad2), IoError);
  std::istringstream bad3("not a header\n");
  EXPECT_THROW(read_edge_list(bad3), IoError);
  EXPECT_THROW(load_graph("/nonexistent/dir/g.txt"), IoError);
}

TEST(GraphIo, FormatByExtension) {
  EXPECT_EQ(format_for_path("a.col"), GraphFormat::Dimacs);
  EXPECT_EQ(format_for_path("a.dimacs"), GraphFormat::Dimacs);
  EXPECT_EQ(format_for_path("a.txt"), GraphFormat::EdgeList);
}
