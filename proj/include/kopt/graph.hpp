#pragma once

#include <compare>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace kopt {

// Undirected edge with u <= v after normalization.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sparse undirected graph with sorted, duplicate-free, symmetric adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  // Throws InvalidInput on self-loops, duplicate edges or out-of-range endpoints.
  static SimpleGraph from_edges(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return num_edges_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  // All edges with u < v in lexicographic order; the index into this list is the edge id
  // used by edge colorings.
  std::vector<Edge> edges() const;

  int add_vertex();
  void add_edge(int u, int v);

  // Regularity degree, or -1 if the graph is not regular (or empty).
  int regular_degree() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::int64_t num_edges_ = 0;
};

bool is_connected(const SimpleGraph& g);

// Two-coloring of a bipartite graph (side 0/1 per vertex), empty if the graph has an odd cycle.
std::vector<int> bipartition(const SimpleGraph& g);
inline bool is_bipartite(const SimpleGraph& g) {
  return g.num_vertices() == 0 || !bipartition(g).empty();
}

// Directed multigraph arc; label records where the arc came from (e.g. a tour edge index).
struct Arc {
  int tail = 0;
  int head = 0;
  int label = 0;

  bool operator==(const Arc&) const = default;
};

// Directed multigraph allowing parallel arcs; every arc carries a unique provenance label.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  explicit MultiDigraph(int n) : n_(n) {}

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int id) const { return arcs_[id]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Throws InvalidInput on an out-of-range endpoint or a reused label.
  int add_arc(int tail, int head, int label);

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::unordered_set<int> labels_;
};

}  // namespace kopt
