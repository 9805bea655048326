#include <algorithm>
#include <string>
#include <vector>

#include "kopt/adversarial.hpp"
#include "kopt/error.hpp"
#include "kopt/extremal.hpp"

namespace kopt {

namespace {

constexpr std::array<int, 3> kLinkOffsets = {1, 4, 7};

}  // namespace

Gadget gadget_S() {
  Gadget s{SimpleGraph::from_edges(kGadgetSize, {{0, 1}, {0, 4}, {2, 3}, {3, 4},
                                                 {5, 9}, {5, 6}, {6, 7}, {8, 9}}),
           {1, 2, 7, 8}};
  return s;
}

OneTwoBundle build_12tsp_lower(int k, int g, const SimpleGraph& base4reg) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (g < 2 * k + 1) {
    throw InvalidInput("girth parameter " + std::to_string(g) + " is below 2k+1 = " +
                       std::to_string(2 * k + 1));
  }
  if (base4reg.regular_degree() != 4) throw InvalidInput("base graph must be 4-regular");
  const std::optional<int> base_girth = girth(base4reg);
  if (base_girth && *base_girth < g) {
    throw InvalidInput("base graph girth " + std::to_string(*base_girth) + " is below " +
                       std::to_string(g));
  }
  const bool doubled = !is_bipartite(base4reg);
  const SimpleGraph g1 = doubled ? bipartite_double_cover(base4reg) : base4reg;
  const std::vector<int> colour = bipartite_edge_coloring(g1);
  const Gadget gadget = gadget_S();
  const int s = g1.num_vertices();

  SimpleGraph unit(kGadgetSize * s);
  for (int h = 0; h < s; ++h) {
    const int base = kGadgetSize * h;
    for (const Edge& e : gadget.graph.edges()) unit.add_edge(base + e.u, base + e.v);
    for (int j : kLinkOffsets) unit.add_edge(base + j, base + j + 1);
  }
  const std::vector<Edge> g1_edges = g1.edges();
  for (std::size_t i = 0; i < g1_edges.size(); ++i) {
    const int slot = gadget.colour_vertex[colour[i]];
    unit.add_edge(kGadgetSize * g1_edges[i].u + slot, kGadgetSize * g1_edges[i].v + slot);
  }

  OneTwoBundle bundle;
  bundle.instance = OneTwoInstance(std::move(unit));
  bundle.engineered_tour = Tour::identity(kGadgetSize * s);
  bundle.params = {{"k", k}, {"g", g}, {"s", s}, {"base_vertices", base4reg.num_vertices()},
                   {"double_cover", doubled ? 1 : 0}};
  bundle.provenance = "4-regular base graph on " + std::to_string(base4reg.num_vertices()) +
                      " vertices with girth " +
                      (base_girth ? std::to_string(*base_girth) : std::string("infinite")) +
                      (doubled ? ", bipartite double cover applied" : ", bipartite");

  // Witness: open every cycle of the substituted graph at its first vertex and chain the paths.
  const SimpleGraph substituted = substituted_graph(bundle);
  const std::vector<std::vector<int>> cycles = cycle_decomposition(substituted);
  std::vector<int> order;
  order.reserve(kGadgetSize * s);
  for (const std::vector<int>& c : cycles) {
    if (static_cast<int>(c.size()) < g) {
      throw InvariantViolation("substituted graph has a cycle of length " +
                               std::to_string(c.size()) + " below " + std::to_string(g));
    }
    order.insert(order.end(), c.begin(), c.end());
  }
  bundle.witness_tour = Tour(order);

  const Cost engineered = bundle.engineered_cost();
  if (engineered != 11 * static_cast<Cost>(s)) {
    throw InvariantViolation("engineered tour costs " + std::to_string(engineered) +
                             ", expected 11s = " + std::to_string(11 * static_cast<Cost>(s)));
  }
  const Cost bound = 10 * static_cast<Cost>(s) + (10 * static_cast<Cost>(s)) / g;
  if (bundle.witness_cost() > bound) {
    throw InvariantViolation("witness tour costs " + std::to_string(bundle.witness_cost()) +
                             ", above 10s + floor(10s/g) = " + std::to_string(bound));
  }
  return bundle;
}

SimpleGraph substituted_graph(const OneTwoBundle& bundle) {
  const SimpleGraph& unit = bundle.instance.unit_graph();
  const int n = unit.num_vertices();
  if (n % kGadgetSize != 0) throw InvalidInput("vertex count is not a multiple of the gadget size");
  std::vector<Edge> kept;
  for (const Edge& e : unit.edges()) {
    const bool link = e.u / kGadgetSize == e.v / kGadgetSize && e.v == e.u + 1 &&
                      std::find(kLinkOffsets.begin(), kLinkOffsets.end(), e.u % kGadgetSize) !=
                          kLinkOffsets.end();
    if (!link) kept.push_back(e);
  }
  return SimpleGraph::from_edges(n, kept);
}

std::vector<std::vector<int>> cycle_decomposition(const SimpleGraph& graph) {
  if (graph.regular_degree() != 2) throw InvalidInput("cycle decomposition needs a 2-regular graph");
  const int n = graph.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> c{start};
    seen[start] = 1;
    int prev = start;
    int cur = graph.neighbors(start)[0];
    while (cur != start) {
      c.push_back(cur);
      seen[cur] = 1;
      const auto& nb = graph.neighbors(cur);
      const int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

}  // namespace kopt
