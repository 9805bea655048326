#include <unordered_map>

#include "kopt/certify.hpp"
#include "kopt/error.hpp"

namespace kopt {

std::optional<SubedgePair> find_subedge_improving_2move(const GraphInstance& instance,
                                                        const Tour& tour) {
  const int n = tour.size();
  if (n != instance.size()) throw_dimension_mismatch(instance.size(), n);
  const SimpleGraph& g = instance.graph();
  std::unordered_map<std::uint64_t, int> owner;
  std::vector<int> parent(n, -1);
  std::vector<int> queue;
  queue.reserve(n);

  for (int i = 0; i < n; ++i) {
    const int a = tour[i];
    const int b = tour[(i + 1) % n];
    std::fill(parent.begin(), parent.end(), -1);
    parent[a] = a;
    queue.assign(1, a);
    for (std::size_t h = 0; h < queue.size() && parent[b] < 0; ++h) {
      const int x = queue[h];
      for (int y : g.neighbors(x)) {
        if (parent[y] < 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    for (int y = b; y != a; y = parent[y]) {
      const int x = parent[y];
      const std::uint64_t key = static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(n) +
                                static_cast<std::uint64_t>(y);
      const auto [it, inserted] = owner.try_emplace(key, i);
      if (inserted) continue;
      const int j = it->second;
      const int u = tour[j];
      const int v = tour[(j + 1) % n];
      SubedgePair pair;
      pair.first_edge = j;
      pair.second_edge = i;
      pair.shared = Arc{x, y, j};
      pair.move.removed = {make_edge(u, v), make_edge(a, b)};
      pair.move.added = {make_edge(u, a), make_edge(v, b)};
      pair.move.delta = instance.cost(u, a) + instance.cost(v, b) - instance.cost(u, v) -
                        instance.cost(a, b);
      return pair;
    }
  }
  return std::nullopt;
}

}  // namespace kopt
