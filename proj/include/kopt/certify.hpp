#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"
#include "kopt/kimprov.hpp"
#include "kopt/moves.hpp"
#include "kopt/tour.hpp"

namespace kopt {

enum class CertificateStatus { Certified, Improvable, BudgetExceeded };

std::string status_name(CertificateStatus status);

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

struct KOptCertificate {
  CertificateStatus status = CertificateStatus::Certified;
  int k = 0;
  std::uint64_t searched = 0;  // (removed-edge tuple, reconnection) pairs examined
  std::optional<KMove> counterexample;
};

// Exhaustive check that no move replacing r ≤ k tour edges by r non-tour edges gives a cheaper
// tour. For each tuple of removed edges, every perfect matching of the freed edge ends is tried
// and accepted only if it is improving, uses new distinct edges and closes a single cycle.
// Stops with BudgetExceeded once more than `budget` candidates would be examined.
template <TspInstance I>
KOptCertificate verify_k_optimal(const I& instance, const Tour& tour, int k,
                                 std::uint64_t budget = kUnlimitedBudget);

struct AlternatingCycleResult {
  CertificateStatus status = CertificateStatus::Certified;
  std::uint64_t searched = 0;            // DFS nodes visited
  std::optional<std::vector<int>> cycle;  // x_0..x_{2m} with x_{2m} = x_0, first edge a tour edge
  Cost gain = 0;
};

// Exhaustive search for a simple alternating cycle with at most max_edges edges whose
// augmentation gives a strictly cheaper tour. Each cycle is found from its smallest vertex.
template <TspInstance I>
AlternatingCycleResult find_improving_alternating_cycle(const I& instance, const Tour& tour,
                                                        int max_edges,
                                                        std::uint64_t budget = kUnlimitedBudget);

struct ImprovCertificate {
  CertificateStatus status = CertificateStatus::Certified;
  int k = 0;
  std::uint64_t searched = 0;  // change sets evaluated
  std::optional<ImprovMove> counterexample;
};

// Exhaustive check that no set of at most k unit-edge additions and removals improves the
// 2-matching. Enumerates connected groups of at most k+1 components (adjacent when a unit edge
// joins them) and every change set of size ≤ k inside each group.
ImprovCertificate verify_k_improv_optimal(const OneTwoInstance& instance, const TwoMatching& tm,
                                          int k, std::uint64_t budget = kUnlimitedBudget);

// Two tour edges (a→b) and (u→v) whose fixed shortest paths traverse the same directed graph
// edge, and the improving 2-move replacing them by {a,u} and {b,v}.
struct SubedgePair {
  int first_edge = -1;   // tour edge index of (a→b)
  int second_edge = -1;  // tour edge index of (u→v)
  Arc shared;            // the common directed edge
  KMove move;
};

// Fixed shortest paths come from breadth-first search with neighbours in increasing order; the
// first tour edge (in tour order) reaching a directed edge owns it.
std::optional<SubedgePair> find_subedge_improving_2move(const GraphInstance& instance,
                                                        const Tour& tour);

}  // namespace kopt
