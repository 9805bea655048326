#pragma once

#include <vector>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace kopt {

// Replaces `removed` tour edges by equally many `added` non-tour edges.
struct KMove {
  std::vector<Edge> removed;
  std::vector<Edge> added;
  Cost delta = 0;  // cost(added) - cost(removed)

  int size() const { return static_cast<int>(removed.size()); }
};

// Throws InvalidInput unless removed edges are distinct tour edges, added edges are distinct
// non-tour edges and the result is a single Hamiltonian cycle.
Tour apply_move(const Tour& tour, const KMove& move);

template <TspInstance I>
Cost move_delta(const I& instance, const KMove& move) {
  Cost delta = 0;
  for (const Edge& e : move.added) delta += instance.cost(e.u, e.v);
  for (const Edge& e : move.removed) delta -= instance.cost(e.u, e.v);
  return delta;
}

// Whether (T \ removed) ∪ added is a Hamiltonian cycle, in O(r log r) for r removed edges.
// Expects removed ⊆ T and added ∩ T = ∅, both duplicate-free.
bool is_tour_after_exchange(const Tour& tour, const std::vector<Edge>& removed,
                            const std::vector<Edge>& added);

}  // namespace kopt
