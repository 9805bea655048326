#pragma once

// Independent reference implementations used only by the tests. They favour obviousness over
// speed and share no code with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace oracle {

using kopt::Cost;

template <class I>
Cost naive_tour_cost(const I& inst, const std::vector<int>& order) {
  Cost total = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int a = order[i];
    const int b = order[(i + 1) % n];
    total += inst.cost(a, b);
  }
  return total;
}

inline std::set<std::pair<int, int>> edge_set(const std::vector<int>& order) {
  std::set<std::pair<int, int>> out;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int a = order[i];
    const int b = order[(i + 1) % n];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

// Calls f(order) for every Hamiltonian cycle once per direction class: vertex 0 first and
// order[1] < order[n-1].
template <class F>
void for_each_tour(int n, F&& f) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n <= 3) {
    f(order);
    return;
  }
  do {
    if (order[1] < order[n - 1]) f(order);
  } while (std::next_permutation(order.begin() + 1, order.end()));
}

template <class I>
Cost brute_force_optimum(const I& inst) {
  Cost best = std::numeric_limits<Cost>::max();
  for_each_tour(inst.size(), [&](const std::vector<int>& order) {
    best = std::min(best, naive_tour_cost(inst, order));
  });
  return best;
}

// Whether some tour sharing all but at most k edges with `tour` is strictly cheaper.
template <class I>
bool exists_cheaper_k_neighbour(const I& inst, const std::vector<int>& tour, int k) {
  const Cost base = naive_tour_cost(inst, tour);
  const auto base_edges = edge_set(tour);
  bool found = false;
  for_each_tour(inst.size(), [&](const std::vector<int>& order) {
    if (found) return;
    const auto edges = edge_set(order);
    int differing = 0;
    for (const auto& e : edges) differing += base_edges.count(e) ? 0 : 1;
    if (differing <= k && naive_tour_cost(inst, order) < base) found = true;
  });
  return found;
}

template <class I>
std::vector<int> brute_force_optimal_tour(const I& inst) {
  Cost best = std::numeric_limits<Cost>::max();
  std::vector<int> best_order;
  for_each_tour(inst.size(), [&](const std::vector<int>& order) {
    const Cost c = naive_tour_cost(inst, order);
    if (c < best) {
      best = c;
      best_order = order;
    }
  });
  return best_order;
}

// Whether an edge set on n vertices is one Hamiltonian cycle.
inline bool is_hamiltonian_cycle(int n, const std::set<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != n) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& a : adj) {
    if (a.size() != 2) return false;
  }
  int prev = -1;
  int cur = 0;
  int steps = 0;
  do {
    const int nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = nxt;
    ++steps;
  } while (cur != 0 && steps <= n);
  return steps == n;
}

// Simple cycles alternating between tour and non-tour edges, with at most max_edges edges, whose
// augmentation yields a strictly cheaper tour. Reports the first one found as a vertex list
// (first vertex repeated at the end, first edge a tour edge).
template <class I>
std::optional<std::vector<int>> improving_alternating_cycle(const I& inst,
                                                            const std::vector<int>& tour,
                                                            int max_edges) {
  const int n = inst.size();
  const auto tour_edges = edge_set(tour);
  const Cost base = naive_tour_cost(inst, tour);
  auto in_tour = [&](int a, int b) { return tour_edges.count({std::min(a, b), std::max(a, b)}) > 0; };
  std::vector<int> walk;
  std::vector<char> on(n, 0);
  std::optional<std::vector<int>> found;
  auto evaluate = [&] {
    auto edges = tour_edges;
    for (std::size_t j = 0; j < walk.size(); ++j) {
      const int a = walk[j];
      const int b = walk[(j + 1) % walk.size()];
      const std::pair<int, int> e{std::min(a, b), std::max(a, b)};
      if (edges.count(e)) edges.erase(e); else edges.insert(e);
    }
    if (!is_hamiltonian_cycle(n, edges)) return;
    Cost c = 0;
    for (const auto& [a, b] : edges) c += inst.cost(a, b);
    if (c < base) {
      found = walk;
      found->push_back(walk.front());
    }
  };
  std::function<void()> dfs = [&] {
    if (found) return;
    const int len = static_cast<int>(walk.size());  // the walk has len - 1 edges
    const int last = walk.back();
    const bool want_tour = (len - 1) % 2 == 0;
    // Closing adds one non-tour edge, giving len edges in total.
    if (!want_tour && len >= 4 && len <= max_edges && !in_tour(last, walk.front())) {
      evaluate();
      if (found) return;
    }
    if (len + 1 > max_edges) return;
    for (int v = 0; v < n; ++v) {
      if (v == last || on[v] || in_tour(last, v) != want_tour) continue;
      walk.push_back(v);
      on[v] = 1;
      dfs();
      on[v] = 0;
      walk.pop_back();
      if (found) return;
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    walk = {s};
    on[s] = 1;
    dfs();
    on[s] = 0;
  }
  return found;
}

struct ImprovCounts {
  int components = 0;
  int cycles = 0;
  int singletons = 0;
};

inline ImprovCounts count_two_matching(int n, const std::set<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  ImprovCounts out;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (int w : adj[comp[h]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    ++out.components;
    if (comp.size() == 1) ++out.singletons;
    bool all_two = comp.size() >= 3;
    for (int v : comp) all_two = all_two && adj[v].size() == 2;
    if (all_two) ++out.cycles;
  }
  return out;
}

// Whether toggling at most k unit edges yields a 2-matching with a better
// (fewer components, more cycles, fewer singletons) key.
inline bool exists_improving_toggle(int n, const std::vector<std::pair<int, int>>& unit_edges,
                                    const std::set<std::pair<int, int>>& matching, int k) {
  const ImprovCounts base = count_two_matching(n, matching);
  auto better = [&](const ImprovCounts& c) {
    if (c.components != base.components) return c.components < base.components;
    if (c.cycles != base.cycles) return c.cycles > base.cycles;
    return c.singletons < base.singletons;
  };
  const int m = static_cast<int>(unit_edges.size());
  std::vector<int> chosen;
  std::function<bool(int)> rec = [&](int start) -> bool {
    if (!chosen.empty()) {
      auto edges = matching;
      for (int i : chosen) {
        if (edges.count(unit_edges[i])) edges.erase(unit_edges[i]); else edges.insert(unit_edges[i]);
      }
      std::vector<int> deg(n, 0);
      bool ok = true;
      for (const auto& [a, b] : edges) ok = ok && ++deg[a] <= 2 && ++deg[b] <= 2;
      if (ok && better(count_two_matching(n, edges))) return true;
    }
    if (static_cast<int>(chosen.size()) == k) return false;
    for (int i = start; i < m; ++i) {
      chosen.push_back(i);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline std::vector<std::vector<Cost>> floyd_warshall(const kopt::SimpleGraph& g) {
  const int n = g.num_vertices();
  const Cost inf = std::numeric_limits<Cost>::max() / 4;
  std::vector<std::vector<Cost>> d(n, std::vector<Cost>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v : g.neighbors(u)) d[u][v] = 1;
  }
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) d[x][y] = std::min(d[x][y], d[x][z] + d[z][y]);
  return d;
}

// Shortest cycle by deleting each edge and measuring the detour between its endpoints.
inline std::optional<int> girth_by_edge_deletion(const kopt::SimpleGraph& g) {
  std::optional<int> best;
  for (const kopt::Edge& e : g.edges()) {
    const int n = g.num_vertices();
    std::vector<int> dist(n, -1);
    std::vector<int> queue{e.u};
    dist[e.u] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int x = queue[h];
      for (int y : g.neighbors(x)) {
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[e.v] >= 0 && (!best || dist[e.v] + 1 < *best)) best = dist[e.v] + 1;
  }
  return best;
}

inline kopt::SimpleGraph cycle(int n) {
  std::vector<kopt::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(kopt::make_edge(i, (i + 1) % n));
  return kopt::SimpleGraph::from_edges(n, edges);
}

inline kopt::SimpleGraph path(int n) {
  std::vector<kopt::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return kopt::SimpleGraph::from_edges(n, edges);
}

inline kopt::SimpleGraph complete(int n) {
  std::vector<kopt::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return kopt::SimpleGraph::from_edges(n, edges);
}

inline kopt::SimpleGraph petersen() {
  std::vector<kopt::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(kopt::make_edge(i, (i + 1) % 5));
    edges.push_back(kopt::make_edge(i, i + 5));
    edges.push_back(kopt::make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return kopt::SimpleGraph::from_edges(10, edges);
}

}  // namespace oracle
