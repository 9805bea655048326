#pragma once

#include <optional>
#include <vector>

#include "kopt/instance.hpp"
#include "kopt/moves.hpp"
#include "kopt/tour.hpp"

namespace kopt {

// First improving move of size r ≤ k. Sizes are tried in increasing order; for each size the
// removed-edge position tuples are scanned lexicographically and, for each tuple, the
// reconnection patterns in depth-first order (next segment by index, forward before reversed).
// The search is exhaustive, so it is only practical for small k or small n.
// Throws InvalidInput if k < 2 or the tour does not match the instance.
template <TspInstance I>
std::optional<KMove> find_improving_kmove(const I& instance, const Tour& tour, int k);

// Applies improving k-moves until none exists. When `cost_trace` is given it receives the cost
// of the input tour followed by the cost after every applied move.
template <TspInstance I>
Tour k_opt(const I& instance, Tour tour, int k, std::vector<Cost>* cost_trace = nullptr);

}  // namespace kopt
