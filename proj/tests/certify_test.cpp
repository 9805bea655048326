#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kopt/analyzer.hpp"
#include "kopt/certify.hpp"
#include "kopt/error.hpp"
#include "kopt/exact.hpp"
#include "kopt/extremal.hpp"
#include "kopt/kimprov.hpp"
#include "kopt/kopt.hpp"
#include "kopt/lin_kernighan.hpp"
#include "kopt/random_instances.hpp"
#include "oracles.hpp"

using namespace kopt;

namespace {

std::set<std::pair<int, int>> as_pairs(const std::vector<Edge>& edges) {
  std::set<std::pair<int, int>> out;
  for (const Edge& e : edges) out.insert({e.u, e.v});
  return out;
}

// Reverses a random stretch of the tour.
Tour reverse_random_segment(const Tour& tour, Rng& rng) {
  std::vector<int> order = tour.order();
  const int n = static_cast<int>(order.size());
  int i = static_cast<int>(rng() % n);
  int j = static_cast<int>(rng() % n);
  if (i > j) std::swap(i, j);
  std::reverse(order.begin() + i, order.begin() + j + 1);
  return Tour(order);
}

// Random 2-matching made of unit edges.
TwoMatching random_two_matching(const OneTwoInstance& inst, Rng& rng) {
  std::vector<Edge> unit = inst.unit_graph().edges();
  std::shuffle(unit.begin(), unit.end(), rng);
  std::vector<int> deg(inst.size(), 0);
  std::vector<Edge> chosen;
  for (const Edge& e : unit) {
    if (rng() % 3 == 0 || deg[e.u] == 2 || deg[e.v] == 2) continue;
    ++deg[e.u];
    ++deg[e.v];
    chosen.push_back(e);
  }
  return TwoMatching(inst, chosen);
}

std::vector<std::pair<int, int>> unit_pairs(const OneTwoInstance& inst) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : inst.unit_graph().edges()) out.push_back({e.u, e.v});
  return out;
}

// Runs the analyzer on every nonempty class and extracts a move from each violating cycle.
struct ExtractionStats {
  int certificates = 0;
  int violating = 0;
};

template <TspInstance I>
ExtractionStats check_all_classes(const I& inst, const Tour& tour, const Tour& reference, int k) {
  ExtractionStats stats;
  const LengthClassReport report = length_class_report(inst, tour, reference, k);
  const Cost before = tour_cost(inst, tour);
  for (const auto& [l, edges] : report.classes) {
    const G2Certificate cert = build_g2(inst, tour, reference, k, l);
    ++stats.certificates;
    EXPECT_GE(4 * static_cast<int>(cert.retained.size()), cert.q_l);
    if (!cert.has_violating_cycle()) continue;
    ++stats.violating;
    EXPECT_LT(cert.cycle.size(), static_cast<std::size_t>(2 * k));
    const ExtractedMove ex = extract_improving_move(inst, tour, cert);
    EXPECT_LE(static_cast<int>(ex.move.removed.size()), ex.h + 1);
    EXPECT_LE(ex.components, ex.h);
    for (int c : ex.paths_per_component) EXPECT_GE(c, 2);
    Cost short_total = 0;
    for (const Edge& e : ex.short_edges) short_total += inst.cost(e.u, e.v);
    EXPECT_EQ(ex.short_edges.size(), static_cast<std::size_t>(2 * ex.h));
    EXPECT_TRUE(short_edges_within_budget(short_total, report.reference_length, k, l));
    const Tour after = apply_move(tour, ex.move);
    EXPECT_LT(oracle::naive_tour_cost(inst, after.order()), before);
  }
  return stats;
}

}  // namespace

// ---- exact solvers ----

TEST(HeldKarp, TriangleCostsAllThreeEdges) {
  const MetricInstance inst({{0, 3, 4}, {3, 0, 5}, {4, 5, 0}});
  EXPECT_EQ(held_karp(inst).cost, 12);
}

TEST(HeldKarp, MatchesPermutationEnumeration) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + trial % 5;
    const MetricInstance inst = random_metric_instance(n, 50, rng);
    const ExactSolution sol = held_karp(inst);
    EXPECT_EQ(sol.cost, oracle::brute_force_optimum(inst));
    EXPECT_EQ(oracle::naive_tour_cost(inst, sol.tour.order()), sol.cost);
  }
}

TEST(HeldKarp, CollinearPoints) {
  EXPECT_EQ(held_karp(line_instance({0, 1, 2, 3, 4, 5})).cost, 10);
  EXPECT_EQ(held_karp(line_instance({3, 0, 5, 1, 4, 2})).cost, 10);
}

TEST(HeldKarp, RejectsOversizedInstances) {
  EXPECT_THROW(held_karp(OneTwoInstance(oracle::cycle(kHeldKarpMaxVertices + 1))), InvalidInput);
  EXPECT_EQ(held_karp(OneTwoInstance(oracle::cycle(kHeldKarpMaxVertices))).cost,
            kHeldKarpMaxVertices);
}

TEST(HeldKarp, IsDeterministic) {
  Rng rng(8);
  const MetricInstance inst = random_metric_instance(10, 5, rng);
  EXPECT_EQ(held_karp(inst).tour.order(), held_karp(inst).tour.order());
}

TEST(DoubleTreeBound, PathGraphWithinTwiceTreeWeight) {
  for (int n = 2; n <= 12; ++n) {
    const GraphInstance inst = graph_metric(oracle::path(n));
    EXPECT_LE(tour_cost(inst, double_tree_bound(inst)), 2 * (n - 1));
  }
}

TEST(DoubleTreeBound, RandomGraphsBetweenOptimumAndBound) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 8;
    const GraphInstance inst = graph_metric(random_connected_graph(n, 30, rng));
    const Cost c = tour_cost(inst, double_tree_bound(inst));
    EXPECT_LE(c, 2 * (n - 1));
    EXPECT_GE(c, held_karp(inst).cost);
  }
}

// ---- verify_k_optimal ----

TEST(VerifyKOptimal, CrossingTourOnLineIsImprovable) {
  const MetricInstance inst = line_instance({0, 1, 2, 3});
  const Tour crossing({0, 2, 1, 3});
  const KOptCertificate cert = verify_k_optimal(inst, crossing, 2);
  ASSERT_EQ(cert.status, CertificateStatus::Improvable);
  ASSERT_TRUE(cert.counterexample.has_value());
  const Tour better = apply_move(crossing, *cert.counterexample);
  EXPECT_LT(tour_cost(inst, better), tour_cost(inst, crossing));
  EXPECT_EQ(tour_cost(inst, better), 6);
}

TEST(VerifyKOptimal, OptimalTourIsCertified) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricInstance inst = random_metric_instance(8, 30, rng);
    const KOptCertificate cert = verify_k_optimal(inst, held_karp(inst).tour, 3);
    EXPECT_EQ(cert.status, CertificateStatus::Certified);
    EXPECT_GT(cert.searched, 0u);
  }
}

TEST(VerifyKOptimal, AgreesWithNeighbourhoodEnumeration) {
  Rng rng(34);
  int improvable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + trial % 5;
    const int k = 2 + trial % 2;
    const MetricInstance inst = random_metric_instance(n, 20, rng);
    Tour tour = random_tour(n, rng);
    if (trial % 3 == 0) tour = k_opt(inst, tour, k);
    const KOptCertificate cert = verify_k_optimal(inst, tour, k);
    const bool oracle_says = oracle::exists_cheaper_k_neighbour(inst, tour.order(), k);
    ASSERT_NE(cert.status, CertificateStatus::BudgetExceeded);
    EXPECT_EQ(cert.status == CertificateStatus::Improvable, oracle_says) << "trial " << trial;
    if (cert.counterexample) {
      ++improvable;
      const Tour after = apply_move(tour, *cert.counterexample);
      EXPECT_LT(oracle::naive_tour_cost(inst, after.order()), tour_cost(inst, tour));
      EXPECT_LE(cert.counterexample->size(), k);
    }
  }
  EXPECT_GT(improvable, 50);
}

TEST(VerifyKOptimal, BudgetExceededIsDistinct) {
  Rng rng(2);
  const MetricInstance inst = random_metric_instance(12, 30, rng);
  const Tour tour = held_karp(inst).tour;
  const KOptCertificate cert = verify_k_optimal(inst, tour, 3, 10);
  EXPECT_EQ(cert.status, CertificateStatus::BudgetExceeded);
  EXPECT_FALSE(cert.counterexample.has_value());
  EXPECT_EQ(status_name(cert.status), "budget-exceeded");
}

TEST(VerifyKOptimal, RejectsBadK) {
  const MetricInstance inst = line_instance({0, 1, 2, 3});
  EXPECT_THROW(verify_k_optimal(inst, Tour::identity(4), 1), InvalidInput);
}

// ---- alternating cycles ----

TEST(AlternatingCycle, CrossingGivesFourEdgeCycle) {
  const MetricInstance inst = line_instance({0, 1, 2, 3});
  const Tour crossing({0, 2, 1, 3});
  const AlternatingCycleResult r = find_improving_alternating_cycle(inst, crossing, 4);
  ASSERT_EQ(r.status, CertificateStatus::Improvable);
  ASSERT_TRUE(r.cycle.has_value());
  EXPECT_EQ(r.cycle->size(), 5u);
  EXPECT_GT(r.gain, 0);
  EXPECT_EQ(r.gain, gain(inst, crossing, AlternatingWalk{*r.cycle}));
}

TEST(AlternatingCycle, AgreesWithTwoMoveSearch) {
  Rng rng(55);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 8;
    const MetricInstance inst = random_metric_instance(n, 25, rng);
    Tour tour = random_tour(n, rng);
    if (trial % 2 == 0) tour = k_opt(inst, tour, 2);
    const AlternatingCycleResult r = find_improving_alternating_cycle(inst, tour, 4);
    EXPECT_EQ(r.cycle.has_value(), find_improving_kmove(inst, tour, 2).has_value())
        << "trial " << trial;
    const auto oracle_cycle = oracle::improving_alternating_cycle(inst, tour.order(), 4);
    EXPECT_EQ(r.cycle.has_value(), oracle_cycle.has_value());
  }
}

TEST(AlternatingCycle, AgreesWithOracleUpToSixEdges) {
  Rng rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + trial % 5;
    const MetricInstance inst = random_metric_instance(n, 25, rng);
    const Tour tour = lin_kernighan(inst, random_tour(n, rng), 3, 0);
    const AlternatingCycleResult r = find_improving_alternating_cycle(inst, tour, 6);
    EXPECT_EQ(r.cycle.has_value(),
              oracle::improving_alternating_cycle(inst, tour.order(), 6).has_value());
  }
}

TEST(AlternatingCycle, LinKernighanOutputHasNoShortImprovingCycle) {
  Rng rng(57);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + trial % 2;
    const int n = 6 + trial % 6;
    const MetricInstance inst = random_metric_instance(n, 40, rng);
    const LkParameters p = k_lin_kernighan_parameters(k);
    const Tour tour = lin_kernighan(inst, random_tour(n, rng), p.p1, p.p2);
    const AlternatingCycleResult r = find_improving_alternating_cycle(inst, tour, 2 * k);
    EXPECT_EQ(r.status, CertificateStatus::Certified) << "trial " << trial;
  }
}

// ---- verify_k_improv_optimal ----

TEST(VerifyKImprovOptimal, HamiltonianUnitCycleIsCertified) {
  const OneTwoInstance inst(oracle::cycle(8));
  const TwoMatching tm = tour_to_two_matching(inst, Tour::identity(8));
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(verify_k_improv_optimal(inst, tm, k).status, CertificateStatus::Certified);
  }
}

TEST(VerifyKImprovOptimal, DeletedEdgeIsReadded) {
  const OneTwoInstance inst(oracle::cycle(8));
  std::vector<Edge> edges = inst.unit_graph().edges();
  const Edge dropped = edges[3];
  edges.erase(edges.begin() + 3);
  const TwoMatching tm(inst, edges);
  const ImprovCertificate cert = verify_k_improv_optimal(inst, tm, 2);
  ASSERT_EQ(cert.status, CertificateStatus::Improvable);
  ASSERT_TRUE(cert.counterexample.has_value());
  EXPECT_TRUE(cert.counterexample->removed.empty());
  EXPECT_EQ(cert.counterexample->added, std::vector<Edge>{dropped});
}

TEST(VerifyKImprovOptimal, AgreesWithToggleEnumeration) {
  Rng rng(71);
  int improvable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + trial % 5;
    const int k = 1 + trial % 3;
    const OneTwoInstance inst = random_one_two_instance(n, 35, rng);
    TwoMatching tm = random_two_matching(inst, rng);
    if (trial % 4 == 0) tm = tour_to_two_matching(inst, k_improv(inst, random_tour(n, rng), k));
    const ImprovCertificate cert = verify_k_improv_optimal(inst, tm, k);
    const bool oracle_says = oracle::exists_improving_toggle(n, unit_pairs(inst),
                                                             as_pairs(tm.edges()), k);
    EXPECT_EQ(cert.status == CertificateStatus::Improvable, oracle_says) << "trial " << trial;
    if (cert.counterexample) {
      ++improvable;
      EXPECT_LE(cert.counterexample->size(), k);
      const TwoMatching after = apply_improv_move(inst, tm, *cert.counterexample);
      EXPECT_TRUE(after.key().better_than(tm.key()));
    }
  }
  EXPECT_GT(improvable, 30);
}

TEST(VerifyKImprovOptimal, KImprovOutputIsCertified) {
  Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8 + trial % 8;
    const int k = 2 + trial % 3;
    const OneTwoInstance inst = random_one_two_instance(n, 25, rng);
    std::vector<ImprovKey> trace;
    const Tour tour = k_improv(inst, random_tour(n, rng), k, 0, &trace);
    ASSERT_FALSE(trace.empty());
    // The final 2-matching is the last one in the trace; rebuild it from the tour's unit edges
    // only when the tour keeps all of them, which holds when no path was closed by a unit edge.
    const TwoMatching tm = tour_to_two_matching(inst, tour);
    if (tm.key() == trace.back()) {
      EXPECT_EQ(verify_k_improv_optimal(inst, tm, k).status, CertificateStatus::Certified);
    }
  }
}

TEST(VerifyKImprovOptimal, BudgetExceeded) {
  const OneTwoInstance inst(oracle::cycle(14));
  const TwoMatching tm = tour_to_two_matching(inst, Tour::identity(14));
  EXPECT_EQ(verify_k_improv_optimal(inst, tm, 3, 5).status, CertificateStatus::BudgetExceeded);
}

// ---- length classes ----

TEST(LengthClass, UpperBoundaryIsInclusive) {
  // k=2: r = 3/4. With L = 64, c = 64·(3/4)^2 = 36 lies in class 2, 37 in class 1.
  EXPECT_EQ(length_class(36, 64, 2), 2);
  EXPECT_TRUE(is_l_long(36, 64, 2, 2));
  EXPECT_FALSE(is_l_long(36, 64, 2, 1));
  EXPECT_EQ(length_class(37, 64, 2), 1);
  EXPECT_EQ(length_class(48, 64, 2), 1);
  EXPECT_EQ(length_class(49, 64, 2), 0);
  EXPECT_EQ(length_class(27, 64, 2), 3);
  EXPECT_EQ(length_class(28, 64, 2), 2);
  EXPECT_THROW(length_class(0, 64, 2), InvalidInput);
  EXPECT_THROW(length_class(5, 64, 1), InvalidInput);
}

TEST(LengthClass, AgreesWithFloatingPointAwayFromBoundaries) {
  for (int k = 2; k <= 4; ++k) {
    const double r = (4.0 * k - 5) / (4.0 * k - 4);
    for (Cost c = 1; c <= 500; ++c) {
      const double x = static_cast<double>(c) / 1000.0;
      const double l = std::log(x) / std::log(r);
      if (std::abs(l - std::round(l)) < 1e-6) continue;
      EXPECT_EQ(length_class(c, 1000, k), static_cast<int>(std::ceil(l)) - 1) << c << " " << k;
    }
  }
}

TEST(LengthClass, ZeroCostEdgesAreUnclassified) {
  const MetricInstance inst({{0, 0, 2, 2}, {0, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}});
  const Tour t = Tour::identity(4);
  const LengthClassReport report = length_class_report(inst, t, t, 2);
  EXPECT_EQ(report.reference_length, 5);
  EXPECT_EQ(report.classified(), 3);
}

TEST(LengthClass, ClassCountsSumToAtMostN) {
  Rng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 11;
    const MetricInstance inst = random_metric_instance(n, 60, rng);
    const Tour ref = double_tree_bound(inst);
    const Tour tour = k_opt(inst, random_tour(n, rng), 2);
    const LengthClassReport report = length_class_report(inst, tour, ref, 2 + trial % 3);
    int total = 0;
    for (const auto& [l, edges] : report.classes) {
      EXPECT_EQ(report.q(l), static_cast<int>(edges.size()));
      total += report.q(l);
    }
    EXPECT_EQ(total, report.classified());
    EXPECT_LE(total, n);
  }
}

TEST(LengthClass, ArcCountFormula) {
  EXPECT_EQ(arc_count(2, 0), 4);
  EXPECT_EQ(arc_count(2, 1), 8);   // 4·ceil(4/3)
  EXPECT_EQ(arc_count(2, 2), 8);   // 4·ceil(16/9)
  EXPECT_EQ(arc_count(2, 3), 12);  // 4·ceil(64/27)
  EXPECT_EQ(arc_count(3, 0), 8);
  EXPECT_EQ(arc_count(3, 1), 16);  // 8·ceil(8/7)
  EXPECT_EQ(arc_count(3, 5), 16);  // 8·ceil(32768/16807)
  EXPECT_EQ(arc_count(3, 6), 24);  // 8·ceil(262144/117649)
}

TEST(ContractionMap, HalfOpenArcs) {
  // Reference circle of length 8 with unit steps, M = 4 arcs of length 2.
  const GraphInstance inst = graph_metric(oracle::cycle(8));
  const ContractionMap map(inst, Tour::identity(8), 2, 0);
  EXPECT_EQ(map.arc_count(), 4);
  EXPECT_EQ(map.circumference(), 8);
  for (int v = 0; v < 8; ++v) {
    EXPECT_EQ(map.position(v), v);
    EXPECT_EQ(map.arc(v), v / 2);
  }
  EXPECT_TRUE(map.near(0, 1));
  EXPECT_FALSE(map.near(1, 2));
}

TEST(ContractionMap, NonDivisibleLengthUsesExactBoundaries) {
  // Circle of length 7 split into 4 arcs: boundaries 0, 7/4, 7/2, 21/4.
  const GraphInstance inst = graph_metric(oracle::cycle(7));
  const ContractionMap map(inst, Tour::identity(7), 2, 0);
  const std::vector<std::int64_t> expected{0, 0, 1, 1, 2, 2, 3};
  EXPECT_EQ(map.arcs_by_vertex(), expected);
}

// ---- G2 ----

TEST(BuildG2, ColouringRetainsAQuarter) {
  Rng rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + trial % 10;
    const MetricInstance inst = random_metric_instance(n, 80, rng);
    const Tour ref = double_tree_bound(inst);
    const Tour tour = random_tour(n, rng);
    const int k = 2 + trial % 3;
    const LengthClassReport report = length_class_report(inst, tour, ref, k);
    for (const auto& [l, edges] : report.classes) {
      const G2Certificate cert = build_g2(inst, tour, ref, k, l);
      EXPECT_EQ(cert.q_l, report.q(l));
      EXPECT_GE(4 * static_cast<int>(cert.retained.size()), cert.q_l);
      for (int e : cert.retained) {
        const int a = cert.g1_vertex_of[tour[e]];
        const int b = cert.g1_vertex_of[tour[(e + 1) % n]];
        EXPECT_TRUE(cert.red[a]);
        EXPECT_FALSE(cert.red[b]);
      }
    }
  }
}

TEST(BuildG2, ParallelRetainedEdgesFormTwoCycle) {
  // Points on a line at 0,0,10,10: tour 0,2,1,3 uses two long edges between the two clusters in
  // the same direction, which contract to parallel red->blue edges.
  const MetricInstance inst = line_instance({0, 0, 10, 10});
  const Tour ref({0, 1, 2, 3});
  const Tour tour({0, 2, 1, 3});
  const LengthClassReport report = length_class_report(inst, tour, ref, 2);
  ASSERT_EQ(report.classes.size(), 1u);
  const int l = report.classes.begin()->first;
  const G2Certificate cert = build_g2(inst, tour, ref, 2, l);
  ASSERT_TRUE(cert.girth.has_value());
  EXPECT_EQ(*cert.girth, 2);
  ASSERT_EQ(cert.cycle.size(), 2u);
  const ExtractedMove ex = extract_improving_move(inst, tour, cert);
  EXPECT_EQ(ex.h, 1);
  EXPECT_EQ(ex.move.size(), 2);
  EXPECT_LT(tour_cost(inst, apply_move(tour, ex.move)), tour_cost(inst, tour));
}

TEST(BuildG2, ThreeOptimalToursHaveGirthAtLeastSix) {
  Rng rng(92);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + trial % 10;
    const MetricInstance inst = random_metric_instance(n, 100, rng);
    const Tour ref = held_karp(inst).tour;
    const Tour tour = k_opt(inst, random_tour(n, rng), 3);
    const LengthClassReport report = length_class_report(inst, tour, ref, 3);
    for (const auto& [l, edges] : report.classes) {
      const G2Certificate cert = build_g2(inst, tour, ref, 3, l);
      EXPECT_FALSE(cert.has_violating_cycle()) << "trial " << trial << " class " << l;
      if (cert.girth) {
        EXPECT_GE(*cert.girth, 6);
      }
      if (cert.arc_count <= 9) {
        EXPECT_LE(cert.q_l, 4 * ex_bruteforce(static_cast<int>(cert.arc_count), 6).edges);
      }
    }
  }
}

TEST(BuildG2, ReportIsDeterministicText) {
  Rng rng(93);
  const MetricInstance inst = random_metric_instance(10, 50, rng);
  const Tour ref = held_karp(inst).tour;
  const Tour tour = random_tour(10, rng);
  const LengthClassReport report = length_class_report(inst, tour, ref, 2);
  const int l = report.classes.begin()->first;
  const std::string a = format_g2_certificate(build_g2(inst, tour, ref, 2, l));
  EXPECT_EQ(a, format_g2_certificate(build_g2(inst, tour, ref, 2, l)));
  EXPECT_NE(a.find("arcs"), std::string::npos);
  EXPECT_EQ(format_length_classes(report), format_length_classes(report));
}

TEST(LengthClass, EdgeOfHalfTheReferenceIsAccepted) {
  // The reference 0,1,2,3 on a line has length 6 and the edge {0,3} costs exactly 3.
  const MetricInstance inst = line_instance({0, 1, 2, 3});
  const LengthClassReport report =
      length_class_report(inst, Tour({0, 2, 1, 3}), Tour::identity(4), 2);
  EXPECT_EQ(report.classified(), 4);
  EXPECT_EQ(report.q(2), 1);
  EXPECT_EQ(report.q(3), 2);
  EXPECT_EQ(report.q(6), 1);
}

// ---- extraction ----

TEST(ExtractImprovingMove, PerturbedOptimalToursYieldImprovingMoves) {
  Rng rng(101);
  int triggered = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 8 + trial % 7;
    const MetricInstance inst = clustered_metric_instance(n, 2 + trial % 3, rng);
    const Tour ref = held_karp(inst).tour;
    // Fresh perturbations of the optimum until some class shows a short cycle.
    for (int attempt = 0; attempt < 25; ++attempt) {
      Tour tour = ref;
      for (int step = 0; step < 1 + attempt % 3; ++step) tour = reverse_random_segment(tour, rng);
      if (check_all_classes(inst, tour, ref, 3).violating > 0) {
        ++triggered;
        break;
      }
    }
  }
  EXPECT_GE(triggered, 60);
}

TEST(ExtractImprovingMove, WorksForLargerK) {
  Rng rng(102);
  int triggered = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 10 + trial % 5;
    const MetricInstance inst = clustered_metric_instance(n, 3, rng);
    const Tour ref = held_karp(inst).tour;
    Tour tour = ref;
    for (int step = 0; step < 2 + trial % 3; ++step) tour = reverse_random_segment(tour, rng);
    if (check_all_classes(inst, tour, ref, 4).violating > 0) ++triggered;
  }
  EXPECT_GT(triggered, 0);
}

TEST(ExtractImprovingMove, RejectsCertificateWithoutCycle) {
  Rng rng(103);
  const MetricInstance inst = random_metric_instance(8, 50, rng);
  const Tour ref = held_karp(inst).tour;
  const LengthClassReport report = length_class_report(inst, ref, ref, 3);
  const G2Certificate cert = build_g2(inst, ref, ref, 3, report.classes.begin()->first);
  ASSERT_FALSE(cert.has_violating_cycle());
  EXPECT_THROW(extract_improving_move(inst, ref, cert), InvalidInput);
  G2Certificate bad = cert;
  bad.cycle = {0, 1};
  EXPECT_THROW(extract_improving_move(inst, ref, bad), InvalidInput);
}

// ---- subedges ----

TEST(SubedgeTwoMove, SharedBridgeGivesImprovingMove) {
  // Two triangles joined by the bridge 2-3.
  const SimpleGraph g =
      SimpleGraph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  const GraphInstance inst = graph_metric(g);
  const Tour tour({0, 4, 1, 5, 2, 3});
  const auto pair = find_subedge_improving_2move(inst, tour);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->shared.tail, 2);
  EXPECT_EQ(pair->shared.head, 3);
  EXPECT_EQ(pair->move.size(), 2);
  const Tour after = apply_move(tour, pair->move);
  EXPECT_LT(tour_cost(inst, after), tour_cost(inst, tour));
}

TEST(SubedgeTwoMove, DisjointPathsGiveNothing) {
  const GraphInstance inst = graph_metric(oracle::cycle(7));
  EXPECT_FALSE(find_subedge_improving_2move(inst, Tour::identity(7)).has_value());
}

TEST(SubedgeTwoMove, ConsistentWithTwoOptimality) {
  Rng rng(111);
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + trial % 10;
    const GraphInstance inst = graph_metric(random_connected_graph(n, 20, rng));
    Tour tour = random_tour(n, rng);
    if (trial % 2 == 0) {
      tour = k_opt(inst, tour, 2);
      ASSERT_EQ(verify_k_optimal(inst, tour, 2).status, CertificateStatus::Certified);
      EXPECT_FALSE(find_subedge_improving_2move(inst, tour).has_value()) << "trial " << trial;
    } else if (const auto pair = find_subedge_improving_2move(inst, tour)) {
      ++found;
      EXPECT_LT(tour_cost(inst, apply_move(tour, pair->move)), tour_cost(inst, tour));
      EXPECT_EQ(verify_k_optimal(inst, tour, 2).status, CertificateStatus::Improvable);
    }
  }
  EXPECT_GT(found, 10);
}
