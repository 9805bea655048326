#include <algorithm>
#include <numeric>

#include "kopt/extremal.hpp"

namespace kopt {

SimpleGraph bipartite_double_cover(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  if (n > 0 && graph.regular_degree() < 0) {
    throw InvalidInput("bipartite double cover expects a regular graph");
  }
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(graph.num_edges()));
  for (const Edge& e : graph.edges()) {
    edges.push_back(make_edge(e.u, n + e.v));
    edges.push_back(make_edge(n + e.u, e.v));
  }
  return SimpleGraph::from_edges(2 * n, edges);
}

namespace {

// Adjacency with edge ids; entries for vertex v are sorted by neighbour.
struct IndexedAdjacency {
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge id)

  explicit IndexedAdjacency(const SimpleGraph& g) : edges(g.edges()), adj(g.num_vertices()) {
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
      adj[edges[id].u].push_back({edges[id].v, id});
      adj[edges[id].v].push_back({edges[id].u, id});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
  }
};

// First cycle met by a DFS that starts at the smallest vertex with live edges and scans
// neighbours in increasing order; returns its edge ids, or nothing when the live edges form a forest.
std::vector<int> first_dfs_cycle(const IndexedAdjacency& g, const std::vector<char>& alive) {
  const int n = static_cast<int>(g.adj.size());
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 finished
  std::vector<int> parent_edge(n, -1);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == g.adj[u].size()) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      const auto [w, id] = g.adj[u][next++];
      if (!alive[id] || id == parent_edge[u]) continue;
      if (state[w] == 1) {
        std::vector<int> cycle{id};
        for (int x = u; x != w; x = parent[x]) cycle.push_back(parent_edge[x]);
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = u;
        parent_edge[w] = id;
        stack.push_back({w, 0});
      }
    }
  }
  return {};
}

}  // namespace

EulerianSubgraph eulerian_subgraph(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  if (n == 0) return {};
  IndexedAdjacency indexed(graph);
  std::vector<char> alive(indexed.edges.size(), 1);
  std::vector<char> peeled(indexed.edges.size(), 0);
  while (true) {
    const std::vector<int> cycle = first_dfs_cycle(indexed, alive);
    if (cycle.empty()) break;
    for (int id : cycle) {
      alive[id] = 0;
      peeled[id] = 1;
    }
  }

  // Components of the peeled graph on the full vertex set.
  std::vector<int> comp(n, -1);
  std::vector<std::int64_t> comp_edges;
  std::vector<std::int64_t> comp_vertices;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(comp_edges.size());
    comp_edges.push_back(0);
    comp_vertices.push_back(0);
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++comp_vertices[c];
      for (auto [w, id] : indexed.adj[u]) {
        if (!peeled[id]) continue;
        if (u < w) ++comp_edges[c];
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  int best = 0;
  for (int c = 1; c < static_cast<int>(comp_edges.size()); ++c) {
    // Components are numbered by their smallest vertex, so strict improvement keeps ties stable.
    if (comp_edges[c] * comp_vertices[best] > comp_edges[best] * comp_vertices[c]) best = c;
  }
  EulerianSubgraph out;
  std::vector<int> relabel(n, -1);
  for (int v = 0; v < n; ++v) {
    if (comp[v] == best) {
      relabel[v] = static_cast<int>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (int id = 0; id < static_cast<int>(indexed.edges.size()); ++id) {
    const Edge e = indexed.edges[id];
    if (peeled[id] && comp[e.u] == best) edges.push_back(make_edge(relabel[e.u], relabel[e.v]));
  }
  out.graph = SimpleGraph::from_edges(static_cast<int>(out.original.size()), edges);
  return out;
}

std::vector<int> eulerian_walk(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (graph.degree(v) % 2 != 0) {
      throw InvalidInput("vertex " + std::to_string(v) + " has odd degree");
    }
    if (start < 0 && graph.degree(v) > 0) start = v;
  }
  if (start < 0) return {};
  IndexedAdjacency indexed(graph);
  std::vector<char> used(indexed.edges.size(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> stack{start};
  std::vector<int> circuit;
  while (!stack.empty()) {
    const int u = stack.back();
    auto& list = indexed.adj[u];
    while (cursor[u] < list.size() && used[list[cursor[u]].second]) ++cursor[u];
    if (cursor[u] == list.size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      const auto [w, id] = list[cursor[u]];
      used[id] = 1;
      stack.push_back(w);
    }
  }
  if (circuit.size() != indexed.edges.size() + 1) {
    throw InvalidInput("edges of the graph are not connected");
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();
  return circuit;
}

std::vector<int> bipartite_edge_coloring(const SimpleGraph& graph) {
  if (!is_bipartite(graph)) throw InvalidInput("edge coloring expects a bipartite graph");
  const int n = graph.num_vertices();
  const int colors = graph.max_degree();
  const std::vector<Edge> edges = graph.edges();
  std::vector<int> color(edges.size(), -1);
  // at[v * colors + c] = edge id with color c at v, or -1.
  std::vector<int> at(static_cast<std::size_t>(n) * colors, -1);
  auto slot = [&](int v, int c) -> int& { return at[static_cast<std::size_t>(v) * colors + c]; };
  auto free_color = [&](int v) {
    for (int c = 0; c < colors; ++c) {
      if (slot(v, c) < 0) return c;
    }
    throw InvariantViolation("no free color at a vertex");
  };
  auto other = [&](int id, int v) { return edges[id].u == v ? edges[id].v : edges[id].u; };

  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    const int u = edges[id].u;
    const int v = edges[id].v;
    const int a = free_color(u);
    if (slot(v, a) >= 0) {
      const int b = free_color(v);
      // Swap a and b along the alternating path leaving v through color a. In a bipartite
      // graph this path cannot reach u, so a becomes free at v while staying free at u.
      std::vector<int> path;
      int x = v;
      int c = a;
      while (slot(x, c) >= 0) {
        const int e = slot(x, c);
        path.push_back(e);
        x = other(e, x);
        c = c == a ? b : a;
      }
      for (int e : path) {
        slot(edges[e].u, color[e]) = -1;
        slot(edges[e].v, color[e]) = -1;
      }
      for (int e : path) {
        color[e] = color[e] == a ? b : a;
        slot(edges[e].u, color[e]) = e;
        slot(edges[e].v, color[e]) = e;
      }
    }
    color[id] = a;
    slot(u, a) = id;
    slot(v, a) = id;
  }
  return color;
}

}  // namespace kopt
