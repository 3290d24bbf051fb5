#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "powergraph/coloring.hpp"
#include "powergraph/conjecture.hpp"
#include "powergraph/error.hpp"
#include "powergraph/generators.hpp"
#include "powergraph/graph_ops.hpp"
#include "powergraph/power_metrics.hpp"

using namespace powergraph;
using testutil::make;

namespace {

bool proper_by_oracle(const Graph& g, unsigned r, const Coloring& c) {
  const auto pw = oracle::power_matrix(g, r);
  for (std::size_t i = 0; i < pw.size(); ++i)
    for (std::size_t j = i + 1; j < pw.size(); ++j)
      if (pw[i][j] && c.colors[i] == c.colors[j]) return false;
  return true;
}

}  // namespace

TEST(GreedyColoring, Examples) {
  EXPECT_EQ(greedy_power_coloring(empty_graph(6), 3).palette_size, 1u);
  const std::vector<Vertex> rev{3, 2, 1, 0};
  EXPECT_EQ(greedy_power_coloring(complete_graph(4), 1, rev).palette_size, 4u);
  EXPECT_EQ(greedy_power_coloring(complete_graph(4), 1).palette_size, 4u);
  EXPECT_EQ(greedy_power_coloring(cycle_graph(5), 2).palette_size, 5u);
}

TEST(GreedyColoring, RejectsNonPermutation) {
  const std::vector<Vertex> dup{0, 1, 1};
  EXPECT_THROW(greedy_power_coloring(path_graph(3), 1, dup), std::invalid_argument);
  const std::vector<Vertex> shortv{0, 1};
  EXPECT_THROW(greedy_power_coloring(path_graph(3), 1, shortv), std::invalid_argument);
}

TEST(GreedyColoring, ProperAndWithinMaxDegreeForAnyOrder) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = testutil::gnp(70, 0.04, seed);
    std::vector<Vertex> order(70);
    std::iota(order.begin(), order.end(), Vertex{0});
    RandomSource src(seed);
    std::shuffle(order.begin(), order.end(), src);
    for (unsigned r = 1; r <= 3; ++r) {
      const auto c = greedy_power_coloring(g, r, order);
      EXPECT_TRUE(proper_by_oracle(g, r, c));
      EXPECT_TRUE(verify_proper_power_coloring(g, r, c).proper);
      EXPECT_LE(c.palette_size, power_max_degree(g, r).delta + 1);
      EXPECT_EQ(c.radius, r);
    }
  }
}

TEST(ExactChromatic, Examples) {
  EXPECT_EQ(dsatur_chromatic_exact(cycle_graph(5)).chi, 3u);
  const auto c9sq = graph_power(cycle_graph(9), 2);
  const auto res = dsatur_chromatic_exact(c9sq);
  EXPECT_EQ(res.chi, 3u);
  EXPECT_EQ(res.witness.palette_size, 3u);
  EXPECT_TRUE(verify_proper_power_coloring(c9sq, 1, res.witness).proper);
  // Hand certificate: 0,1,2 repeating.
  std::vector<Color> pattern(9);
  for (Vertex v = 0; v < 9; ++v) pattern[v] = v % 3;
  EXPECT_TRUE(verify_proper_power_coloring(cycle_graph(9), 2,
                                           Coloring::from_colors(pattern, 2))
                  .proper);
  EXPECT_EQ(dsatur_chromatic_exact(complete_graph(4)).chi, 4u);
  EXPECT_EQ(dsatur_chromatic_exact(empty_graph(0)).chi, 0u);
  EXPECT_EQ(dsatur_chromatic_exact(empty_graph(3)).chi, 1u);
}

TEST(ExactChromatic, MatchesBacktrackingOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = testutil::gnp(16, 0.2 + 0.02 * static_cast<double>(seed % 15), seed);
    const auto res = dsatur_chromatic_exact(g);
    EXPECT_EQ(res.chi, oracle::chromatic_number(oracle::adjacency(g))) << "seed " << seed;
    EXPECT_TRUE(verify_proper_power_coloring(g, 1, res.witness).proper);
    EXPECT_EQ(res.witness.palette_size, res.chi);
  }
}

TEST(ExactChromatic, BudgetExceededCarriesBounds) {
  const auto g = testutil::gnp(70, 0.5, 12);
  try {
    dsatur_chromatic_exact(g, 3);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GE(e.lower, 2u);
    EXPECT_GE(e.upper, e.lower);
  }
}

TEST(DsaturHeuristic, ProperOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = testutil::gnp(100, 0.1, seed);
    const auto c = dsatur_coloring(g);
    EXPECT_TRUE(verify_proper_power_coloring(g, 1, c).proper);
    EXPECT_LE(c.palette_size, g.max_degree() + 1);
  }
}

TEST(TwoPhase, StarSquared) {
  const auto c = two_phase_power_coloring(star_graph(3), 2);
  EXPECT_EQ(c.palette_size, 4u);
  EXPECT_TRUE(verify_proper_power_coloring(star_graph(3), 2, c).proper);
}

TEST(TwoPhase, PathSquared) {
  const auto p5 = path_graph(5);
  const auto c = two_phase_power_coloring(p5, 2);
  EXPECT_LE(c.palette_size, 3u);
  EXPECT_TRUE(verify_proper_power_coloring(p5, 2, c).proper);
  EXPECT_EQ(dsatur_chromatic_exact(graph_power(p5, 2)).chi, 3u);
}

TEST(TwoPhase, CycleNineViolatesForestCondition) {
  try {
    two_phase_power_coloring(cycle_graph(9), 2);
    FAIL() << "expected ForestViolation";
  } catch (const ForestViolation& e) {
    EXPECT_EQ(e.cycle.size(), 9u);
    EXPECT_EQ(e.cycle.front(), 0u);
    EXPECT_EQ(e.code(), ErrorCode::ForestViolation);
  }
}

TEST(TwoPhase, RequiresRadiusTwo) {
  EXPECT_THROW(two_phase_power_coloring(path_graph(4), 1), std::invalid_argument);
}

TEST(TwoPhase, TreesAlwaysSucceedWithinBound) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomSource src(seed);
    const auto t = random_tree(120, src);
    for (unsigned r = 2; r <= 4; ++r) {
      const auto c = two_phase_power_coloring(t, r);
      EXPECT_TRUE(verify_proper_power_coloring(t, r, c).proper);
      EXPECT_LE(c.palette_size, power_max_degree(t, r - 1).delta + 1);
    }
  }
}

TEST(TwoPhase, WheneverItSucceedsItIsWithinBound) {
  std::size_t successes = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = testutil::gnp(60, 0.9 / 60, seed);
    for (unsigned r = 2; r <= 3; ++r) {
      try {
        const auto c = two_phase_power_coloring(g, r);
        ++successes;
        EXPECT_TRUE(proper_by_oracle(g, r, c));
        EXPECT_LE(c.palette_size, power_max_degree(g, r - 1).delta + 1);
      } catch (const ForestViolation& e) {
        for (std::size_t i = 0; i < e.cycle.size(); ++i) {
          EXPECT_TRUE(g.has_edge(e.cycle[i], e.cycle[(i + 1) % e.cycle.size()]));
        }
      }
    }
  }
  EXPECT_GT(successes, 0u);
}

TEST(VerifyColoring, Examples) {
  const auto g = testutil::gnp(30, 0.2, 5);
  std::vector<Color> rainbow(30);
  std::iota(rainbow.begin(), rainbow.end(), Color{0});
  EXPECT_TRUE(verify_proper_power_coloring(g, 3, Coloring::from_colors(rainbow, 3)).proper);

  const auto bad = verify_proper_power_coloring(complete_graph(3), 1,
                                                Coloring::from_colors({0, 0, 0}, 1));
  EXPECT_FALSE(bad.proper);
  ASSERT_TRUE(bad.conflict.has_value());
  EXPECT_EQ(*bad.conflict, (std::pair<Vertex, Vertex>{0, 1}));

  EXPECT_TRUE(verify_proper_power_coloring(path_graph(5), 2,
                                           Coloring::from_colors({0, 1, 2, 0, 1}, 2))
                  .proper);
  EXPECT_FALSE(verify_proper_power_coloring(path_graph(5), 2,
                                            Coloring::from_colors({0, 1, 0, 2, 1}, 2))
                   .proper);
}

TEST(VerifyColoring, WrongSizeIsImproper) {
  const auto check = verify_proper_power_coloring(path_graph(5), 1,
                                                  Coloring::from_colors({0, 1}, 1));
  EXPECT_FALSE(check.proper);
  EXPECT_FALSE(check.conflict.has_value());
}

TEST(VerifyColoring, ParallelAgreesWithSerial) {
  const auto g = testutil::gnp(300, 0.01, 7);
  auto c = greedy_power_coloring(g, 2);
  c.colors[17] = c.colors[g.neighbors(17).empty() ? 18 : g.neighbors(17)[0]];
  const auto a = verify_proper_power_coloring(g, 2, c, 1);
  const auto b = verify_proper_power_coloring(g, 2, c, 5);
  EXPECT_EQ(a.proper, b.proper);
  EXPECT_EQ(a.conflict, b.conflict);
}

TEST(ColoringIo, TextRoundTrip) {
  const auto c = greedy_power_coloring(petersen_graph(), 2);
  std::stringstream ss;
  write_coloring(ss, c);
  EXPECT_EQ(ss.str().substr(0, 7), "s 10 2\n");
  EXPECT_EQ(read_coloring(ss), c);
}

TEST(ColoringIo, DimacsSolutionRoundTrip) {
  const auto c = greedy_power_coloring(cycle_graph(6), 1);
  std::stringstream ss;
  write_dimacs_solution(ss, c);
  EXPECT_NE(ss.str().find("l 1 "), std::string::npos);
  EXPECT_EQ(read_dimacs_solution(ss, 1), c);
}

TEST(ColoringIo, MalformedThrows) {
  std::istringstream in("s 2 1\nc 0 5\n");
  EXPECT_THROW(read_coloring(in), IoError);
}

TEST(ConjectureGap, Examples) {
  const auto k4 = conjecture_gap(complete_graph(4), 1);
  EXPECT_EQ(k4.omega.value(), 4u);
  EXPECT_EQ(k4.alpha.value(), 1u);
  EXPECT_EQ(k4.chi.value(), 4u);
  EXPECT_DOUBLE_EQ(k4.ratio, 1.0);
  EXPECT_TRUE(k4.all_exact);

  const auto c5 = conjecture_gap(cycle_graph(5), 2);
  EXPECT_EQ(c5.omega.value(), 5u);
  EXPECT_EQ(c5.alpha.value(), 1u);
  EXPECT_EQ(c5.chi.value(), 5u);
  EXPECT_DOUBLE_EQ(c5.ratio, 1.0);

  const auto c9 = conjecture_gap(cycle_graph(9), 2);
  EXPECT_EQ(c9.omega.value(), 3u);
  EXPECT_EQ(c9.alpha.value(), 3u);
  EXPECT_EQ(c9.chi.value(), 3u);
  EXPECT_DOUBLE_EQ(c9.ratio, 1.0);
}

TEST(ConjectureGap, BudgetsBecomeBounds) {
  const auto g = testutil::gnp(90, 0.12, 2);
  GapBudgets b;
  b.clique_nodes = 2;
  b.independence_nodes = 2;
  b.chromatic_nodes = 2;
  const auto rep = conjecture_gap(g, 2, b);
  EXPECT_FALSE(rep.all_exact);
  EXPECT_LE(rep.omega.lower, rep.omega.upper);
  EXPECT_LE(rep.alpha.lower, rep.alpha.upper);
  EXPECT_LE(rep.chi.lower, rep.chi.upper);
  EXPECT_GT(rep.ratio, 0.0);
}
