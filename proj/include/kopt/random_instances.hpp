#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace kopt {

using Rng = std::mt19937_64;

// Shortest-path closure of independent uniform weights in [1, max_weight].
MetricInstance random_metric_instance(int n, Cost max_weight, Rng& rng);

// Shortest-path closure of weights that are small inside `clusters` groups and large between
// them; produces many long tour edges whose endpoints sit close together.
MetricInstance clustered_metric_instance(int n, int clusters, Rng& rng);

// Metric of points on a line: c(i,j) = |x_i - x_j|.
MetricInstance line_instance(const std::vector<Cost>& points);

// Every pair is a unit edge independently with probability percent/100.
OneTwoInstance random_one_two_instance(int n, int percent, Rng& rng);

// Random spanning tree plus extra random edges, each present with probability percent/100.
SimpleGraph random_connected_graph(int n, int percent, Rng& rng);

Tour random_tour(int n, Rng& rng);

}  // namespace kopt
