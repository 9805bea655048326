#include <optional>
#include <string>
#include <vector>

#include "kopt/adversarial.hpp"
#include "kopt/error.hpp"
#include "kopt/exact.hpp"
#include "kopt/extremal.hpp"

namespace kopt {

GraphBundle build_graph_tsp_lower(int f, int k, const SimpleGraph& base) {
  if (f < 1 || k < 1) throw InvalidInput("graph construction needs f >= 1 and k >= 1");
  const int n = base.num_vertices();
  if (n == 0 || base.regular_degree() != 2 * f) {
    throw InvalidInput("base graph must be " + std::to_string(2 * f) + "-regular");
  }
  if (!is_connected(base)) throw InvalidInput("base graph must be connected");
  const std::optional<int> g = girth(base);
  if (!g || *g < 2 * k * f) {
    throw InvalidInput("base graph girth " + (g ? std::to_string(*g) : std::string("infinite")) +
                       " is below 2kf = " + std::to_string(2 * k * f));
  }

  std::vector<int> walk = eulerian_walk(base);
  SimpleGraph expanded = base;
  std::vector<char> marked(n, 0);
  std::vector<char> marked_position(walk.size(), 0);
  for (std::size_t i = 0; i < walk.size(); i += static_cast<std::size_t>(f)) {
    const int v = walk[i];
    if (marked[v]) {
      const int clone = expanded.add_vertex();
      for (int w : base.neighbors(v)) expanded.add_edge(clone, w);
      marked.push_back(1);
      walk[i] = clone;
    } else {
      marked[v] = 1;
    }
    marked_position[i] = 1;
  }
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (!marked[walk[i]]) {
      marked[walk[i]] = 1;
      marked_position[i] = 1;
    }
  }
  std::vector<int> order;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (marked_position[i]) order.push_back(walk[i]);
  }

  GraphBundle bundle;
  bundle.instance = graph_metric(expanded);
  bundle.engineered_tour = Tour(order);
  bundle.witness_tour = double_tree_bound(bundle.instance);
  bundle.params = {{"f", f}, {"k", k}, {"base_vertices", n}, {"base_girth", *g},
                   {"vertices", expanded.num_vertices()}};
  bundle.provenance = std::to_string(2 * f) + "-regular base graph on " + std::to_string(n) +
                      " vertices with girth " + std::to_string(*g);
  const Cost cost = bundle.engineered_cost();
  if (cost != static_cast<Cost>(f) * n) {
    throw InvariantViolation("marking-walk tour costs " + std::to_string(cost) + ", expected " +
                             std::to_string(static_cast<Cost>(f) * n));
  }
  if (expanded.num_vertices() >= 2 * n) {
    throw InvariantViolation("marking walk created too many clones");
  }
  return bundle;
}

GraphBundle extend_graph_tsp(const GraphBundle& bundle, int a, int b) {
  if (a < 1 || b < 0) throw InvalidInput("extension needs a >= 1 and b >= 0");
  const SimpleGraph& g = bundle.instance.graph();
  const int m = g.num_vertices();
  const int total = a * m + b;
  SimpleGraph chained(total);
  for (int copy = 0; copy < a; ++copy) {
    for (const Edge& e : g.edges()) chained.add_edge(copy * m + e.u, copy * m + e.v);
  }
  // The chain v_1..v_{a+b}: vertex 0 of each copy, then the extra vertices.
  std::vector<int> chain;
  for (int copy = 0; copy < a; ++copy) chain.push_back(copy * m);
  for (int j = 0; j < b; ++j) chain.push_back(a * m + j);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) chained.add_edge(chain[i], chain[i + 1]);

  const Tour& t = bundle.engineered_tour;
  const int start = t.position(0);
  std::vector<int> order;
  order.reserve(total);
  for (int copy = 0; copy < a; ++copy) {
    for (int i = 0; i < m; ++i) order.push_back(copy * m + t[(start + i) % m]);
  }
  for (int j = 0; j < b; ++j) order.push_back(a * m + j);

  GraphBundle out;
  out.instance = graph_metric(chained);
  out.engineered_tour = Tour(order);
  out.witness_tour = double_tree_bound(out.instance);
  out.params = bundle.params;
  out.params.emplace_back("a", a);
  out.params.emplace_back("b", b);
  out.params.emplace_back("extended_vertices", total);
  out.provenance = std::to_string(a) + " chained copies of (" + bundle.provenance + ") plus " +
                   std::to_string(b) + " path vertices";
  const Cost expected = a * bundle.engineered_cost() + 2 * static_cast<Cost>(a + b - 1);
  if (out.engineered_cost() != expected) {
    throw InvariantViolation("extended tour costs " + std::to_string(out.engineered_cost()) +
                             ", expected " + std::to_string(expected));
  }
  return out;
}

}  // namespace kopt
