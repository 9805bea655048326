#include <gtest/gtest.h>

#include "kopt/error.hpp"
#include "kopt/extremal.hpp"
#include "kopt/io.hpp"
#include "kopt/random_instances.hpp"
#include "oracles.hpp"

using namespace kopt;

TEST(TourCost, UniformTriangle) {
  const MetricInstance inst({{0, 5, 5}, {5, 0, 5}, {5, 5, 0}});
  EXPECT_EQ(tour_cost(inst, Tour({2, 0, 1})), 15);
}

TEST(TourCost, AllUnitTourCostsN) {
  const OneTwoInstance inst(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_EQ(tour_cost(inst, Tour::identity(5)), 5);
  EXPECT_EQ(tour_cost(inst, Tour({0, 2, 4, 1, 3})), 10);
}

TEST(TourCost, MatchesNaiveSummation) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const MetricInstance inst = random_metric_instance(8, 50, rng);
    const Tour tour = random_tour(8, rng);
    EXPECT_EQ(tour_cost(inst, tour), oracle::naive_tour_cost(inst, tour.order()));
  }
}

TEST(TourCost, InvariantUnderRotationAndReversal) {
  Rng rng(12);
  const MetricInstance inst = random_metric_instance(9, 30, rng);
  const Tour tour = random_tour(9, rng);
  std::vector<int> order = tour.order();
  std::rotate(order.begin(), order.begin() + 4, order.end());
  EXPECT_EQ(tour_cost(inst, Tour(order)), tour_cost(inst, tour));
  std::reverse(order.begin(), order.end());
  EXPECT_EQ(tour_cost(inst, Tour(order)), tour_cost(inst, tour));
}

TEST(TourCost, DimensionMismatchThrows) {
  const MetricInstance inst({{0, 1}, {1, 0}});
  EXPECT_THROW(tour_cost(inst, Tour::identity(3)), InvalidInput);
}

TEST(TourType, RejectsNonPermutations) {
  EXPECT_THROW(Tour({0, 0, 1}), InvalidInput);
  EXPECT_THROW(Tour({0, 3, 1}), InvalidInput);
}

TEST(TourType, CanonicalForm) {
  const Tour t({3, 1, 0, 2, 4});
  const Tour c = t.canonical();
  EXPECT_EQ(c.order(), (std::vector<int>{0, 1, 3, 4, 2}));
  EXPECT_TRUE(t.same_cycle(c));
  EXPECT_EQ(c.canonical(), c);
}

TEST(TourType, FromEdgesRoundTrip) {
  const Tour t({4, 2, 0, 3, 1, 5});
  EXPECT_TRUE(Tour::from_edges(6, t.edges()).same_cycle(t));
  // Two disjoint triangles are not a tour.
  EXPECT_THROW(Tour::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), InvalidInput);
}

TEST(ValidateMetric, LineMetricIsMetric) {
  const std::vector<Cost> pts{0, 3, 4, 9};
  EXPECT_TRUE(validate_metric(line_instance(pts).matrix()).ok());
}

TEST(ValidateMetric, ReportsForcedViolation) {
  // a=0, z=1, b=2 with c(a,b)=10, c(a,z)=c(z,b)=1.
  const CostMatrix m{{0, 1, 10}, {1, 0, 1}, {10, 1, 0}};
  const MetricCheck check = validate_metric(m);
  EXPECT_TRUE(check.structural.empty());
  ASSERT_EQ(check.violations.size(), 1u);
  EXPECT_EQ(check.violations[0], (TriangleViolation{0, 1, 2}));
}

TEST(ValidateMetric, PetersenHopMetricRecheckedExhaustively) {
  const GraphInstance inst = graph_metric(oracle::petersen());
  EXPECT_TRUE(validate_metric(inst.metric().matrix()).ok());
}

TEST(ValidateMetric, StructuralProblemsReportedSeparately) {
  const MetricCheck asym = validate_metric({{0, 1}, {2, 0}});
  EXPECT_FALSE(asym.structural.empty());
  EXPECT_TRUE(asym.violations.empty());
  const MetricCheck neg = validate_metric({{0, -1}, {-1, 0}});
  EXPECT_FALSE(neg.structural.empty());
  EXPECT_THROW(MetricInstance({{0, 1}, {2, 0}}), InvalidInput);
  EXPECT_THROW(MetricInstance({{0, 1, 10}, {1, 0, 1}, {10, 1, 0}}), InvalidInput);
}

TEST(GraphMetric, PathDistances) {
  const GraphInstance inst = graph_metric(oracle::path(3));
  EXPECT_EQ(inst.cost(0, 2), 2);
  EXPECT_EQ(inst.cost(2, 0), 2);
}

TEST(GraphMetric, CycleDiameter) {
  const GraphInstance inst = graph_metric(oracle::cycle(6));
  Cost diameter = 0;
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) diameter = std::max(diameter, inst.cost(u, v));
  EXPECT_EQ(diameter, 3);
}

TEST(GraphMetric, CageDistancesMatchFloydWarshall) {
  const SimpleGraph cage = *load_cage(4, 8);
  const GraphInstance inst = graph_metric(cage);
  const auto d = oracle::floyd_warshall(cage);
  for (int u = 0; u < cage.num_vertices(); ++u)
    for (int v = 0; v < cage.num_vertices(); ++v) ASSERT_EQ(inst.cost(u, v), d[u][v]);
  EXPECT_TRUE(validate_metric(inst.metric().matrix()).ok());
}

TEST(GraphMetric, DisconnectedGraphThrows) {
  EXPECT_THROW(graph_metric(SimpleGraph::from_edges(4, {{0, 1}, {2, 3}})), InvalidInput);
}

TEST(DuplicateVertex, ZeroDistanceCopyStaysMetric) {
  const MetricInstance inst({{0, 2, 3}, {2, 0, 4}, {3, 4, 0}});
  const MetricInstance dup = duplicate_vertex(inst, 1);
  ASSERT_EQ(dup.size(), 4);
  EXPECT_EQ(dup.cost(1, 3), 0);
  EXPECT_EQ(dup.cost(3, 2), 4);
  EXPECT_TRUE(validate_metric(dup.matrix()).ok());
}

TEST(DuplicateVertex, OptimumUnchanged) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + trial % 5;
    const MetricInstance inst = random_metric_instance(n, 40, rng);
    const MetricInstance dup = duplicate_vertex(inst, trial % n);
    EXPECT_EQ(oracle::brute_force_optimum(inst), oracle::brute_force_optimum(dup));
  }
}

TEST(DuplicateVertex, TwiceGivesMutuallyZeroCopies) {
  const MetricInstance inst({{0, 2, 3}, {2, 0, 4}, {3, 4, 0}});
  const MetricInstance twice = duplicate_vertex(duplicate_vertex(inst, 0), 0);
  EXPECT_EQ(twice.size(), 5);
  EXPECT_EQ(twice.cost(3, 4), 0);
  EXPECT_EQ(twice.cost(0, 4), 0);
  EXPECT_TRUE(validate_metric(twice.matrix()).ok());
}

TEST(InstanceIo, ReadsFullMatrix) {
  const std::string text =
      "NAME: tiny\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
      "EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n0 1 2\n1 0 1\n2 1 0\nEOF\n";
  const AnyInstance inst = read_instance(text, InstanceFormat::FullMatrix);
  ASSERT_TRUE(std::holds_alternative<MetricInstance>(inst));
  EXPECT_EQ(std::get<MetricInstance>(inst).size(), 3);
  EXPECT_EQ(std::get<MetricInstance>(inst).cost(0, 2), 2);
}

TEST(InstanceIo, ReadsEdgeListAsGraphInstance) {
  const AnyInstance inst = read_instance("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n", InstanceFormat::EdgeList);
  ASSERT_TRUE(std::holds_alternative<GraphInstance>(inst));
  const auto& g = std::get<GraphInstance>(inst);
  EXPECT_EQ(g.size(), 5);
  EXPECT_EQ(g.graph().num_edges(), 5);
}

TEST(InstanceIo, RoundTripIsByteIdentical) {
  Rng rng(5);
  const MetricInstance inst = random_metric_instance(20, 100, rng);
  const std::string once = write_instance(inst, InstanceFormat::FullMatrix);
  const AnyInstance back = read_instance(once, InstanceFormat::FullMatrix);
  EXPECT_EQ(std::get<MetricInstance>(back), inst);
  EXPECT_EQ(write_instance(back, InstanceFormat::FullMatrix), once);

  const OneTwoInstance unit = random_one_two_instance(15, 30, rng);
  const std::string unit_text = write_instance(unit, InstanceFormat::UnitEdgeList);
  const AnyInstance unit_back = read_instance(unit_text, InstanceFormat::UnitEdgeList);
  EXPECT_EQ(std::get<OneTwoInstance>(unit_back), unit);
  EXPECT_EQ(write_instance(unit_back, InstanceFormat::UnitEdgeList), unit_text);
}

TEST(InstanceIo, ParseErrorsCarryPosition) {
  try {
    read_instance("3 2\n0 1\n1 x\n", InstanceFormat::EdgeList);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
  try {
    read_instance(
        "TYPE: TSP\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        "EDGE_WEIGHT_SECTION\n0 4\n5 0\n",
        InstanceFormat::FullMatrix);
    FAIL() << "expected an asymmetry error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7);
    EXPECT_EQ(e.column(), 1);
  }
  EXPECT_THROW(read_instance("TYPE: ATSP\n", InstanceFormat::FullMatrix), ParseError);
  EXPECT_THROW(read_instance("2 1\n0 2\n", InstanceFormat::EdgeList), ParseError);
}

TEST(TourIo, RoundTrip) {
  const Tour t({2, 0, 3, 1});
  const std::string text = write_tour(t, "t");
  EXPECT_NE(text.find("TOUR_SECTION\n3\n1\n4\n2\n-1\n"), std::string::npos);
  EXPECT_EQ(read_tour(text), t);
  EXPECT_EQ(write_tour(read_tour(text), "t"), text);
  EXPECT_THROW(read_tour("TOUR_SECTION\n1\n1\n-1\n"), ParseError);
}
