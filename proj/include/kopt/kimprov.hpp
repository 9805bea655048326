#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace kopt {

inline constexpr int kMaxImprovK = 6;

// Isolated vertices count as components and as singletons.
struct ImprovKey {
  int components = 0;
  int cycles = 0;
  int singletons = 0;

  // Fewer components, then more cycles, then fewer singletons.
  bool better_than(const ImprovKey& other) const {
    if (components != other.components) return components < other.components;
    if (cycles != other.cycles) return cycles > other.cycles;
    return singletons < other.singletons;
  }
  bool operator==(const ImprovKey&) const = default;
};

// Unit-cost edge set of maximum degree two.
class TwoMatching {
 public:
  TwoMatching() = default;
  explicit TwoMatching(int n);
  // Throws InvalidInput on non-unit, repeated or out-of-range edges, or a vertex of degree > 2.
  TwoMatching(const OneTwoInstance& instance, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(adj_.size()); }
  int degree(int v) const { return (adj_[v][0] >= 0) + (adj_[v][1] >= 0); }
  // Neighbours of v; unused slots hold -1.
  const std::array<int, 2>& neighbor_slots(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u][0] == v || adj_[u][1] == v; }
  int num_edges() const { return num_edges_; }
  std::vector<Edge> edges() const;

  int components() const { return key_.components; }
  int cycles() const { return key_.cycles; }
  int singletons() const { return key_.singletons; }
  const ImprovKey& key() const { return key_; }

  // Component id of every vertex; ids are assigned in order of smallest vertex.
  std::vector<int> component_labels() const;

  bool operator==(const TwoMatching& other) const { return edges() == other.edges(); }

 private:
  void recount();

  std::vector<std::array<int, 2>> adj_;
  int num_edges_ = 0;
  ImprovKey key_;
};

struct ImprovMove {
  std::vector<Edge> removed;
  std::vector<Edge> added;

  int size() const { return static_cast<int>(removed.size() + added.size()); }
};

// The unit-cost edges of the tour.
TwoMatching tour_to_two_matching(const OneTwoInstance& instance, const Tour& tour);

// Breaks every cycle at a seeded edge and joins the resulting paths in a seeded order and
// orientation. The cost is n plus the number of joining edges of cost 2.
Tour two_matching_to_tour(const OneTwoInstance& instance, const TwoMatching& tm,
                          std::uint64_t seed);

// Throws InvalidInput if the move does not yield a valid 2-matching.
TwoMatching apply_improv_move(const OneTwoInstance& instance, const TwoMatching& tm,
                              const ImprovMove& move);

// Exhaustive search over sets of at most k additions and removals of unit edges. Only sets whose
// changes are linked through the components they touch are enumerated; an improving set that is
// not linked splits into linked parts, one of which is already improving.
// Throws InvalidInput unless 1 ≤ k ≤ kMaxImprovK.
std::optional<ImprovMove> find_improving_improv_move(const OneTwoInstance& instance,
                                                     const TwoMatching& tm, int k);

// Tour -> 2-matching -> improving moves to a fixed point -> tour. `key_trace` receives the key
// before and after every applied move.
Tour k_improv(const OneTwoInstance& instance, const Tour& tour, int k, std::uint64_t seed = 0,
              std::vector<ImprovKey>* key_trace = nullptr);

}  // namespace kopt
