#pragma once

#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace kopt {

inline constexpr int kHeldKarpMaxVertices = 18;

struct ExactSolution {
  Tour tour;
  Cost cost = 0;
};

// Optimal tour by dynamic programming over vertex subsets. Ties are broken towards the smaller
// predecessor, so the result is deterministic. Throws InvalidInput if n > kHeldKarpMaxVertices
// or n == 0.
template <TspInstance I>
ExactSolution held_karp(const I& instance);

// Minimum spanning tree (Prim from vertex 0, ties to the smaller vertex), walked in preorder
// with children in increasing order. Cost is at most twice the tree weight.
template <TspInstance I>
Tour double_tree_bound(const I& instance);

}  // namespace kopt
