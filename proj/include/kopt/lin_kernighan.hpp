#pragma once

#include <vector>

#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace kopt {

// Vertices x_0..x_{2m}. Edges {x_{2i}, x_{2i+1}} must be tour edges and edges
// {x_{2i+1}, x_{2i+2}} non-tour edges. The walk is closed when x_{2m} = x_0.
struct AlternatingWalk {
  std::vector<int> vertices;

  int num_edges() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

// Sum of removed tour edge costs minus added non-tour edge costs.
// Throws InvalidInput if the walk has an odd number of edges or does not alternate against `tour`.
template <TspInstance I>
Cost gain(const I& instance, const Tour& tour, const AlternatingWalk& walk);

// True iff every prefix x_0..x_{2i} with 1 ≤ i ≤ m has strictly positive gain.
template <TspInstance I>
bool is_proper(const I& instance, const Tour& tour, const AlternatingWalk& walk);

struct LkParameters {
  int p1;
  int p2;
};

// p1 = 2k-1, p2 = 2k-4. k = 3 gives the classic (5, 2).
constexpr LkParameters k_lin_kernighan_parameters(int k) { return {2 * k - 1, 2 * k - 4}; }

// Depth-first search for an improving closed alternating walk with backtracking limited to
// depth p1 and closing-tour filtering above depth p2; augments the best walk found and repeats.
// Candidates at each depth are tried by descending partial gain, ties by vertex id.
// `cost_trace` receives the input cost and the cost after every augmentation.
// Throws InvalidInput if p1 < 1, p2 < 0 or the tour does not match the instance.
template <TspInstance I>
Tour lin_kernighan(const I& instance, Tour tour, int p1, int p2,
                   std::vector<Cost>* cost_trace = nullptr);

}  // namespace kopt
