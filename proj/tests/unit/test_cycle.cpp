#include <gtest/gtest.h>

#include <algorithm>

#include "lexcycle/checkers.hpp"
#include "lexcycle/constructions.hpp"
#include "lexcycle/cycle.hpp"
#include "oracles.hpp"

using namespace lexcycle;
using oracle::names;
using oracle::order;

namespace {

void expect_consistent(SearchKind kind, const Graph& g, const CycleReport& r) {
  ASSERT_EQ(r.cycle.size(), r.cycle_length);
  EXPECT_LE(r.tail + r.cycle_length, r.total_sweeps);
  for (std::size_t i = 0; i < r.cycle_length; ++i)
    EXPECT_EQ(plus_sweep(kind, g, r.cycle[i]), r.cycle[(i + 1) % r.cycle_length]);
  for (std::size_t d = 1; d < r.cycle_length; ++d)
    if (r.cycle_length % d == 0) EXPECT_NE(r.cycle[d], r.cycle[0]) << "period " << d;
}

/// Comparability graph of the transitive closure of a random DAG on 0..n-1.
/// Its complement is a cocomparability graph.
Graph random_comparability(std::size_t n, double p, std::uint64_t seed) {
  const Graph dag = oracle::random_graph(n, p, seed);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dag.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        reach[i][j] = true;
        for (std::size_t k = j + 1; k < n; ++k)
          if (reach[j][k]) reach[i][k] = true;
      }
  GraphBuilder b;
  b.add_vertices("v", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (reach[i][j]) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

}  // namespace

TEST(DetectCycle, NineVertexExampleHasPeriodThree) {
  const Fixture f = fixture_g3();
  const auto r = detect_cycle(SearchKind::LexBFS, f.graph, f.ordering("sigma1"));
  EXPECT_EQ(r.cycle_length, 3u);
  EXPECT_EQ(r.tail, 0u);
  EXPECT_EQ(r.cycle[0], f.ordering("sigma1"));
  EXPECT_EQ(r.cycle[1], f.ordering("sigma2"));
  EXPECT_EQ(r.cycle[2], f.ordering("sigma3"));
  expect_consistent(SearchKind::LexBFS, f.graph, r);
}

TEST(DetectCycle, TwelveVertexExampleHasPeriodFour) {
  const Fixture f = fixture_g4();
  const auto r = detect_cycle(SearchKind::LexBFS, f.graph, f.ordering("mu1"));
  EXPECT_EQ(r.cycle_length, 4u);
  expect_consistent(SearchKind::LexBFS, f.graph, r);
}

TEST(DetectCycle, LexDfsExampleHasPeriodFour) {
  const Fixture f = fixture_lexdfs_example();
  const auto r = detect_cycle(SearchKind::LexDFS, f.graph, f.ordering("sigma1"));
  EXPECT_EQ(r.cycle_length, 4u);
  EXPECT_EQ(r.tail, 0u);
  expect_consistent(SearchKind::LexDFS, f.graph, r);
}

TEST(DetectCycle, CliqueAlternatesWithDual) {
  const Graph g = gen_complete(6);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = detect_cycle(SearchKind::LexBFS, g, random_ordering(6, seed));
    ASSERT_EQ(r.cycle_length, 2u);
    EXPECT_EQ(r.cycle[1], r.cycle[0].dual());
  }
}

TEST(DetectCycle, SingleVertexIsAFixedPoint) {
  const auto r = detect_cycle(SearchKind::LexBFS, gen_complete(1), Ordering::identity(1));
  EXPECT_EQ(r.cycle_length, 1u);
}

TEST(DetectCycle, AgreesWithLinearSearchOracle) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t n = 2 + seed % 14;
    const Graph g = oracle::random_graph(n, 0.2 + 0.05 * static_cast<double>(seed % 12), seed);
    const auto start = oracle::random_permutation(n, seed);
    for (SearchKind k : {SearchKind::LexBFS, SearchKind::LexDFS, SearchKind::BFS}) {
      const auto expected = oracle::find_cycle(k, g, start);
      const auto r = detect_cycle(k, g, Ordering(start));
      EXPECT_EQ(r.tail, expected.tail);
      EXPECT_EQ(r.cycle_length, expected.length);
      expect_consistent(k, g, r);
    }
  }
}

TEST(DetectCycle, BudgetExhaustionCarriesTrace) {
  const Fixture f = fixture_g3();
  try {
    detect_cycle(SearchKind::LexBFS, f.graph, f.ordering("sigma1"), 2);
    FAIL() << "expected BudgetExhausted";
  } catch (const BudgetExhausted& e) {
    ASSERT_EQ(e.trace().size(), 3u);
    EXPECT_EQ(e.trace()[0], f.ordering("sigma1"));
    EXPECT_EQ(e.trace()[2], f.ordering("sigma3"));
  }
}

TEST(DetectCycle, DefaultBudget) {
  EXPECT_EQ(default_max_sweeps(0), 64u);
  EXPECT_EQ(default_max_sweeps(14), 64u);
  EXPECT_EQ(default_max_sweeps(100), 408u);
}

TEST(LexCycle, NineVertexExampleIsThree) {
  const Fixture f = fixture_g3();
  const auto r = lex_cycle(f.graph);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, 3u);
  EXPECT_EQ(detect_cycle(SearchKind::LexBFS, f.graph, r.witness).cycle_length, 3u);
}

TEST(LexCycle, PathOnFourVerticesIsTwo) {
  const Graph g = gen_path(4);
  std::size_t best = 0;
  oracle::for_each_permutation(4, [&](const oracle::Seq& s) {
    if (oracle::is_lexbfs_ordering(g, s)) best = std::max(best, oracle::find_cycle(SearchKind::LexBFS, g, s).length);
  });
  EXPECT_EQ(best, 2u);
  EXPECT_EQ(lex_cycle(g).value, 2u);
}

TEST(LexCycle, SingleVertexIsOne) { EXPECT_EQ(lex_cycle(gen_complete(1)).value, 1u); }

TEST(LexCycle, LexBfsSeedsReachEveryCycle) {
  // Maximum over every permutation as a seed equals the maximum over LexBFS
  // seeds.
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const std::size_t n = 4 + seed % 3;
    const Graph g = oracle::random_graph(n, 0.5, seed);
    std::size_t best = 0;
    oracle::for_each_permutation(n, [&](const oracle::Seq& s) {
      best = std::max(best, oracle::find_cycle(SearchKind::LexBFS, g, s).length);
    });
    EXPECT_EQ(lex_cycle(g).value, best) << serialize_graph(g);
  }
}

TEST(LexCycle, CappedEnumerationIsALowerBound) {
  const auto r = lex_cycle(gen_complete(6), 5);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.seeds_examined, 5u);
  EXPECT_EQ(r.value, 2u);
}

TEST(Orientation, IntervalGraphsGiveCocomparabilityOrders) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = gen_interval(20, seed).graph;
    const auto r = transitive_orientation(g, 64, random_ordering(20, seed));
    EXPECT_EQ(r.trace.size(), r.sweeps_used);
    EXPECT_EQ(r.ordering, r.trace.back());
    EXPECT_EQ(r.trace[r.sweeps_used - 1], r.trace[r.sweeps_used - 3]);
    EXPECT_FALSE(check_cocomp_order(g, r.ordering).has_value());
    EXPECT_FALSE(validate_transitive_orientation(g, r.ordering).has_value());
  }
}

TEST(Orientation, ProperIntervalStopsBySweepFive) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 6 + seed % 35;
    const Graph g = gen_unit_interval(n, seed).graph;
    const auto r = transitive_orientation(g, 16, random_ordering(n, seed));
    EXPECT_LE(r.sweeps_used, 5u);
    ASSERT_GE(r.trace.size(), 3u);
    EXPECT_FALSE(check_pi_order(g, r.trace[2]).has_value());
    if (r.sweeps_used == 5) EXPECT_EQ(r.trace[4], r.trace[2]);
  }
}

TEST(Orientation, TwoChainComplementStopsAtEight) {
  const Fixture f = gen_two_chain(6);
  const Graph g = complement(f.graph);
  const auto r = transitive_orientation(g, 64, f.ordering("tau"));
  EXPECT_EQ(r.sweeps_used, 8u);
  EXPECT_FALSE(validate_transitive_orientation(g, r.ordering).has_value());
}

TEST(Orientation, NonCocomparabilityInputExhaustsBudget) {
  const Fixture f = fixture_g3();
  try {
    transitive_orientation(f.graph, 10, f.ordering("sigma3"));
    FAIL() << "expected BudgetExhausted";
  } catch (const BudgetExhausted& e) {
    EXPECT_EQ(e.trace().size(), 10u);
    EXPECT_EQ(e.trace()[0], f.ordering("sigma1"));
  }
}

TEST(Starjoin, NineAndTwelveVertexExamples) {
  const Fixture g3 = fixture_g3(), g4 = fixture_g4();
  const std::vector<StarjoinComponent> parts{{g3.graph, g3.ordering("sigma1")}, {g4.graph, g4.ordering("mu1")}};
  const auto r = starjoin_cycle_check(parts);
  EXPECT_EQ(r.graph.order(), 24u);
  EXPECT_EQ(r.component_cycle_lengths, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(r.required_divisor, 12u);
  EXPECT_TRUE(r.divisible);
  EXPECT_EQ(r.report.cycle_length, 12u);
  EXPECT_EQ(names(r.graph, r.seed), "r g1 g2 x b a c e f d z y x4 z4 y1 y3 y4 y2 z2 z1 z3 x2 x3 x1");
}

TEST(Starjoin, SingleComponent) {
  const Fixture g3 = fixture_g3();
  const std::vector<StarjoinComponent> parts{{g3.graph, g3.ordering("sigma1")}};
  const auto r = starjoin_cycle_check(parts);
  EXPECT_TRUE(r.divisible);
  EXPECT_EQ(r.report.cycle_length % 3, 0u);
}

TEST(Starjoin, TwoEdges) {
  const Graph k2 = gen_complete(2);
  const std::vector<StarjoinComponent> parts{{k2, Ordering::identity(2)}, {k2, Ordering::identity(2)}};
  const auto r = starjoin_cycle_check(parts);
  EXPECT_EQ(r.required_divisor, 2u);
  EXPECT_TRUE(r.divisible);
}

TEST(Parity, CocomparabilityGraphsHaveEvenPeriods) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 3 + seed % 12;
    const Graph g = complement(random_comparability(n, 0.35, seed));
    const auto r = detect_cycle(SearchKind::LexBFS, g, random_ordering(n, seed));
    EXPECT_EQ(r.cycle_length % 2, 0u) << serialize_graph(g);
  }
}

TEST(Parity, CycleMembersTwoApartAgreeOnNonEdges) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto gen = gen_permutation_graph(5 + seed % 20, seed);
    const auto r = detect_cycle(SearchKind::LexBFS, gen.graph, *gen.witness);
    for (std::size_t i = 0; i < r.cycle_length; ++i) {
      const Ordering& a = r.cycle[i];
      const Ordering& b = r.cycle[(i + 2) % r.cycle_length];
      for (Vertex u = 0; u < static_cast<Vertex>(gen.graph.order()); ++u)
        for (Vertex v = u + 1; v < static_cast<Vertex>(gen.graph.order()); ++v)
          if (!gen.graph.adjacent(u, v)) EXPECT_EQ(a.before(u, v), b.before(u, v));
    }
  }
}

TEST(IntervalGraphs, FirstAndThirdSweepsCoincide) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto gen = gen_interval(6 + seed % 35, seed);
    const auto s = sweep_sequence(SearchKind::LexBFS, gen.graph, *gen.witness, 3).orderings;
    EXPECT_EQ(s[0], s[2]);
  }
}

TEST(ProperIntervalGraphs, SweepOfProperIntervalOrderIsItsDual) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto gen = gen_unit_interval(6 + seed % 35, seed);
    EXPECT_EQ(plus_sweep(SearchKind::LexBFS, gen.graph, *gen.witness), gen.witness->dual());
  }
}

TEST(Trees, PeriodTwoFromTheThirdSweep) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 2 + seed % 59;
    const Graph g = gen_tree(n, seed).graph;
    for (SearchKind k : {SearchKind::BFS, SearchKind::LexBFS}) {
      const auto s = sweep_sequence(k, g, random_ordering(n, seed), 5).orderings;
      EXPECT_EQ(s[4], s[2]);
    }
  }
}

TEST(Trees, SecondSweepNeedNotRecurAtTheFourth) {
  // Path v4 - v1 - v0 - v5 - v3 with a pendant v2 on v0.
  const Graph g = parse_graph("v v0\nv v1\nv v2\nv v3\nv v4\nv v5\nv4 v1\nv1 v0\nv0 v5\nv5 v3\nv0 v2\n");
  const Ordering first = order(g, "v2 v0 v5 v1 v3 v4");
  bool reachable = false;
  oracle::for_each_permutation(6, [&](const oracle::Seq& s) {
    reachable = reachable || plus_sweep(SearchKind::LexBFS, g, Ordering(s)) == first;
  });
  ASSERT_TRUE(reachable);
  for (SearchKind k : {SearchKind::BFS, SearchKind::LexBFS}) {
    const auto s = sweep_sequence(k, g, first, 4).orderings;  // sweeps 2..5
    EXPECT_NE(s[2], s[0]) << names(g, s[0]) << " / " << names(g, s[2]);
    EXPECT_EQ(s[3], s[1]);
  }
}

TEST(DominoFree, PermutationGraphsReachPeriodTwo) {
  std::size_t tested = 0;
  for (std::uint64_t seed = 1; tested < 60 && seed <= 400; ++seed) {
    const auto gen = gen_permutation_graph(6 + seed % 10, seed);
    if (find_induced_domino(gen.graph)) continue;
    ++tested;
    EXPECT_EQ(detect_cycle(SearchKind::LexBFS, gen.graph, *gen.witness).cycle_length, 2u);
  }
  EXPECT_EQ(tested, 60u);
}

TEST(Cobipartite, PeriodTwoWithinQuadraticSweeps) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto gen = gen_cobipartite(3 + seed % 10, 3 + seed % 7, 0.1 * static_cast<double>(seed % 10), seed);
    const std::size_t n = gen.graph.order();
    const auto r = detect_cycle(SearchKind::LexBFS, gen.graph, *gen.witness);
    EXPECT_EQ(r.cycle_length, 2u);
    EXPECT_LT(r.tail, n * n);
  }
}
