#include "kopt/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "kopt/error.hpp"

namespace kopt {

template <TspInstance I>
ExactSolution held_karp(const I& instance) {
  const int n = instance.size();
  if (n == 0) throw InvalidInput("Held-Karp needs at least one vertex");
  if (n > kHeldKarpMaxVertices) {
    throw InvalidInput("Held-Karp is limited to " + std::to_string(kHeldKarpMaxVertices) +
                       " vertices, got " + std::to_string(n));
  }
  if (n <= 3) {
    Tour t = Tour::identity(n);
    return {t, tour_cost(instance, t)};
  }
  // Paths start at vertex 0; subset bits index vertices 1..n-1.
  const int m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> dp(subsets * m, kInf);
  std::vector<std::int8_t> parent(subsets * m, -1);
  auto at = [m](std::size_t mask, int j) { return mask * static_cast<std::size_t>(m) + j; };

  for (int j = 0; j < m; ++j) dp[at(std::size_t{1} << j, j)] = instance.cost(0, j + 1);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1U)) continue;
      const Cost here = dp[at(mask, j)];
      if (here >= kInf) continue;
      for (int nxt = 0; nxt < m; ++nxt) {
        if (mask >> nxt & 1U) continue;
        const std::size_t grown = mask | (std::size_t{1} << nxt);
        const Cost c = here + instance.cost(j + 1, nxt + 1);
        Cost& slot = dp[at(grown, nxt)];
        if (c < slot) {
          slot = c;
          parent[at(grown, nxt)] = static_cast<std::int8_t>(j);
        }
      }
    }
  }
  const std::size_t full = subsets - 1;
  Cost best = kInf;
  int last = -1;
  for (int j = 0; j < m; ++j) {
    const Cost c = dp[at(full, j)] + instance.cost(j + 1, 0);
    if (c < best) {
      best = c;
      last = j;
    }
  }
  std::vector<int> order;
  std::size_t mask = full;
  for (int j = last; j >= 0;) {
    order.push_back(j + 1);
    const int p = parent[at(mask, j)];
    mask &= ~(std::size_t{1} << j);
    j = p;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return {Tour(std::move(order)), best};
}

template <TspInstance I>
Tour double_tree_bound(const I& instance) {
  const int n = instance.size();
  if (n == 0) return Tour();
  constexpr Cost kInf = std::numeric_limits<Cost>::max();
  std::vector<Cost> key(n, kInf);
  std::vector<int> from(n, -1);
  std::vector<char> in_tree(n, 0);
  std::vector<std::vector<int>> children(n);
  key[0] = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int w = 0; w < n; ++w) {
      if (!in_tree[w] && (v < 0 || key[w] < key[v])) v = w;
    }
    in_tree[v] = 1;
    if (from[v] >= 0) children[from[v]].push_back(v);
    for (int w = 0; w < n; ++w) {
      if (in_tree[w]) continue;
      const Cost c = instance.cost(v, w);
      if (c < key[w]) {
        key[w] = c;
        from[w] = v;
      }
    }
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    auto& ch = children[v];
    std::sort(ch.begin(), ch.end());
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return Tour(std::move(order));
}

template ExactSolution held_karp<MetricInstance>(const MetricInstance&);
template ExactSolution held_karp<GraphInstance>(const GraphInstance&);
template ExactSolution held_karp<OneTwoInstance>(const OneTwoInstance&);
template Tour double_tree_bound<MetricInstance>(const MetricInstance&);
template Tour double_tree_bound<GraphInstance>(const GraphInstance&);
template Tour double_tree_bound<OneTwoInstance>(const OneTwoInstance&);

}  // namespace kopt
