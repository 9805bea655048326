#include "kopt/random_instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "kopt/error.hpp"

namespace kopt {
namespace {

MetricInstance closure(int n, std::vector<Cost> d) {
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      const Cost xz = d[x * n + z];
      for (int y = 0; y < n; ++y) {
        const Cost via = xz + d[z * n + y];
        if (via < d[x * n + y]) d[x * n + y] = via;
      }
    }
  }
  return MetricInstance::from_trusted(n, std::move(d));
}

Cost draw(Rng& rng, Cost lo, Cost hi) { return std::uniform_int_distribution<Cost>(lo, hi)(rng); }

}  // namespace

MetricInstance random_metric_instance(int n, Cost max_weight, Rng& rng) {
  if (n < 0 || max_weight < 1) throw InvalidInput("invalid random instance parameters");
  std::vector<Cost> d(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = draw(rng, 1, max_weight);
  }
  return closure(n, std::move(d));
}

MetricInstance clustered_metric_instance(int n, int clusters, Rng& rng) {
  if (n < 0 || clusters < 1) throw InvalidInput("invalid clustered instance parameters");
  std::vector<int> group(n);
  for (int i = 0; i < n; ++i) group[i] = i % clusters;
  std::shuffle(group.begin(), group.end(), rng);
  std::vector<Cost> d(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Cost w = group[i] == group[j] ? draw(rng, 1, 4) : draw(rng, 40, 80);
      d[i * n + j] = d[j * n + i] = w;
    }
  }
  return closure(n, std::move(d));
}

MetricInstance line_instance(const std::vector<Cost>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<Cost> d(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d[i * n + j] = std::abs(points[i] - points[j]);
  }
  return MetricInstance::from_trusted(n, std::move(d));
}

OneTwoInstance random_one_two_instance(int n, int percent, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (draw(rng, 0, 99) < percent) edges.push_back({i, j});
    }
  }
  return OneTwoInstance(n, edges);
}

SimpleGraph random_connected_graph(int n, int percent, Rng& rng) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(draw(rng, 0, v - 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j) && draw(rng, 0, 99) < percent) g.add_edge(i, j);
    }
  }
  return g;
}

Tour random_tour(int n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Tour(std::move(order));
}

}  // namespace kopt
