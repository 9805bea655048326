#include <algorithm>
#include <map>
#include <boost/pending/disjoint_sets.hpp>

#include "kopt/analyzer.hpp"
#include "kopt/error.hpp"

namespace kopt {

namespace {

struct MultiEdge {
  int a;
  int b;
  bool fixed;
  int cycle;
  bool alive = true;

  int other(int v) const { return v == a ? b : a; }
};

}  // namespace

template <TspInstance I>
ExtractedMove extract_improving_move(const I& instance, const Tour& tour,
                                     const G2Certificate& cert) {
  const int n = tour.size();
  if (n != instance.size()) throw_dimension_mismatch(instance.size(), n);
  if (static_cast<int>(cert.arc_of_vertex.size()) != n) {
    throw InvalidInput("certificate was built for a different vertex count");
  }
  const std::vector<int>& cycle = cert.cycle;
  if (cycle.size() < 2 || cycle.size() % 2 != 0) {
    throw InvalidInput("certificate has no violating cycle of even length");
  }
  const int h = static_cast<int>(cycle.size()) / 2;
  std::vector<char> is_c(n, 0);
  for (int e : cycle) {
    if (e < 0 || e >= n || is_c[e]) throw InvalidInput("certificate cycle lists an invalid edge");
    is_c[e] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (is_c[i] && is_c[(i + 1) % n]) throw InvalidInput("two C-edges are consecutive on the tour");
  }
  auto tail = [&](int e) { return tour[e]; };
  auto head = [&](int e) { return tour[(e + 1) % n]; };

  ExtractedMove result;
  result.h = h;

  // Short edges pair the two C-edge endpoints that share an arc.
  std::map<std::int64_t, std::vector<int>> by_arc;
  for (int e : cycle) {
    by_arc[cert.arc_of_vertex[tail(e)]].push_back(tail(e));
    by_arc[cert.arc_of_vertex[head(e)]].push_back(head(e));
  }
  for (const auto& [arc, ends] : by_arc) {
    if (ends.size() != 2 || ends[0] == ends[1]) {
      throw InvalidInput("C-edge endpoints do not pair up by arc");
    }
    result.short_edges.push_back(make_edge(ends[0], ends[1]));
  }

  // Connecting paths: maximal tour segments between C-edges, oriented as in the tour. Path p
  // starts at the head of a C-edge and ends at the tail of the next one.
  std::vector<int> path_of(n, -1);
  std::vector<int> path_start;
  std::vector<int> path_end;
  {
    int first = 0;
    while (!is_c[first]) ++first;
    for (int step = 1; step <= n; ++step) {
      const int i = (first + step) % n;  // tour edge index; vertex tour[i] starts or continues a path
      const int v = tour[i];
      if (is_c[(i - 1 + n) % n]) {
        path_start.push_back(v);
        path_end.push_back(v);
      }
      path_of[v] = static_cast<int>(path_start.size()) - 1;
      path_end.back() = v;
    }
  }
  const int paths = static_cast<int>(path_start.size());

  // Components of connecting paths plus short edges.
  boost::disjoint_sets_with_storage<> path_sets(paths);
  for (const Edge& s : result.short_edges) path_sets.union_set(path_of[s.u], path_of[s.v]);
  std::vector<int> comp_of_path(paths);
  std::map<int, int> root_index;
  for (int p = 0; p < paths; ++p) {
    const int root = static_cast<int>(path_sets.find_set(p));
    const auto [it, inserted] = root_index.try_emplace(root, static_cast<int>(root_index.size()));
    comp_of_path[p] = it->second;
  }
  const int u = static_cast<int>(root_index.size());
  result.components = u;
  result.paths_per_component.assign(u, 0);
  for (int p = 0; p < paths; ++p) ++result.paths_per_component[comp_of_path[p]];
  for (int count : result.paths_per_component) {
    if (count < 2) {
      throw InvariantViolation("a component of connecting paths and short edges has one path");
    }
  }
  if (u > h) throw InvariantViolation("more than h components of connecting paths and short edges");

  // Fixed C-edges: a spanning tree over the components, taken in cycle order.
  boost::disjoint_sets_with_storage<> comp_sets(u);
  std::vector<int> fixed;
  for (int e : cycle) {
    const int a = comp_of_path[path_of[tail(e)]];
    const int b = comp_of_path[path_of[head(e)]];
    if (comp_sets.find_set(a) != comp_sets.find_set(b)) {
      comp_sets.union_set(a, b);
      fixed.push_back(e);
    }
  }
  result.fixed_c_edges = static_cast<int>(fixed.size());
  if (result.fixed_c_edges != u - 1) throw InvariantViolation("C-edges do not connect the components");

  // G': connecting paths, short edges, fixed C-edges and a copy of each.
  std::vector<MultiEdge> edges;
  std::vector<std::vector<int>> incident(n);
  auto add = [&](int a, int b, bool is_fixed, int cyc) {
    const int id = static_cast<int>(edges.size());
    edges.push_back({a, b, is_fixed, cyc});
    incident[a].push_back(id);
    incident[b].push_back(id);
  };
  for (int i = 0; i < n; ++i) {
    if (!is_c[i]) add(tour[i], tour[(i + 1) % n], true, comp_of_path[path_of[tour[i]]]);
  }
  for (const Edge& s : result.short_edges) add(s.u, s.v, false, comp_of_path[path_of[s.u]]);
  for (std::size_t j = 0; j < fixed.size(); ++j) {
    const int cyc = u + static_cast<int>(j);
    add(tail(fixed[j]), head(fixed[j]), true, cyc);
    add(tail(fixed[j]), head(fixed[j]), false, cyc);
  }

  // Shortcut the two non-fixed edges at every degree-4 vertex, lowest vertex first.
  std::vector<int> degree4;
  for (int e : fixed) degree4.push_back(tail(e)), degree4.push_back(head(e));
  std::sort(degree4.begin(), degree4.end());
  for (int b : degree4) {
    std::vector<int> fixed_here;
    std::vector<int> loose_here;
    for (int id : incident[b]) {
      if (edges[id].alive) (edges[id].fixed ? fixed_here : loose_here).push_back(id);
    }
    if (fixed_here.size() != 2 || loose_here.size() != 2) {
      throw InvariantViolation("vertex " + std::to_string(b) + " does not have two fixed and two " +
                               "non-fixed edges");
    }
    const int f0 = edges[fixed_here[0]].cycle;
    const int f1 = edges[fixed_here[1]].cycle;
    const int n0 = edges[loose_here[0]].cycle;
    const int n1 = edges[loose_here[1]].cycle;
    if (f0 == f1 || n0 == n1 || !((f0 == n0 && f1 == n1) || (f0 == n1 && f1 == n0))) {
      throw InvariantViolation("transverse property violated at vertex " + std::to_string(b));
    }
    const int a = edges[loose_here[0]].other(b);
    const int c = edges[loose_here[1]].other(b);
    if (a == c) throw InvariantViolation("shortcut at vertex " + std::to_string(b) + " is a loop");
    for (int id : loose_here) {
      edges[id].alive = false;
      for (int w : {edges[id].a, edges[id].b}) {
        auto& list = incident[w];
        list.erase(std::find(list.begin(), list.end(), id));
      }
    }
    add(a, c, false, n0);
    for (MultiEdge& e : edges) {
      if (e.cycle == n1) e.cycle = n0;
    }
  }
  std::vector<Edge> tour_edges;
  for (const MultiEdge& e : edges) {
    if (e.alive) tour_edges.push_back(make_edge(e.a, e.b));
  }
  Tour current;
  try {
    current = Tour::from_edges(n, tour_edges);
  } catch (const InvalidInput& ex) {
    throw InvariantViolation(std::string("shortcutting did not produce a tour: ") + ex.what());
  }

  // Ambivalent 2-moves. A connecting path is correctly oriented when the current tour walks it
  // in the same direction as the original tour.
  auto correctly_oriented = [&](int p) { return current.next(path_start[p]) == tour.next(path_start[p]); };
  result.ambivalent_moves = h - u;
  for (int iter = 0; iter < h - u; ++iter) {
    int chosen = -1;
    for (int e : cycle) {
      if (correctly_oriented(path_of[tail(e)]) != correctly_oriented(path_of[head(e)])) {
        chosen = e;
        break;
      }
    }
    if (chosen < 0) throw InvariantViolation("no C-edge joins oppositely oriented connecting paths");
    const int t = tail(chosen);
    const int hv = head(chosen);
    // The path neighbour of t is its tour predecessor, that of hv its tour successor.
    const int t_other = current.next(t) == tour.prev(t) ? current.prev(t) : current.next(t);
    const int h_other = current.next(hv) == tour.next(hv) ? current.prev(hv) : current.next(hv);
    const bool t_is_tail = current.next(t) == t_other;
    const bool h_is_tail = current.next(hv) == h_other;
    if (t_is_tail != h_is_tail) {
      throw InvariantViolation("edges next to C-edge " + std::to_string(chosen) +
                               " are not both tails or both heads");
    }
    KMove two;
    two.removed = {make_edge(t, t_other), make_edge(hv, h_other)};
    two.added = {make_edge(t, hv), make_edge(t_other, h_other)};
    current = apply_move(current, two);
  }

  // Net move from the original tour.
  KMove& move = result.move;
  for (const Edge& e : tour.edges()) {
    if (!current.has_edge(e.u, e.v)) move.removed.push_back(e);
  }
  for (const Edge& e : current.edges()) {
    if (!tour.has_edge(e.u, e.v)) move.added.push_back(e);
  }
  move.delta = move_delta(instance, move);
  for (int i = 0; i < n; ++i) {
    if (!is_c[i] && !current.has_edge(tour[i], tour[(i + 1) % n])) {
      throw InvariantViolation("a connecting path edge was lost");
    }
  }
  if (static_cast<int>(move.removed.size()) > h + 1) {
    throw InvariantViolation("extracted move removes more than h+1 edges");
  }
  if (tour_cost(instance, current) >= tour_cost(instance, tour)) {
    throw InvariantViolation("extracted move does not decrease the tour cost");
  }
  return result;
}

template ExtractedMove extract_improving_move<MetricInstance>(const MetricInstance&, const Tour&,
                                                              const G2Certificate&);
template ExtractedMove extract_improving_move<GraphInstance>(const GraphInstance&, const Tour&,
                                                             const G2Certificate&);
template ExtractedMove extract_improving_move<OneTwoInstance>(const OneTwoInstance&, const Tour&,
                                                              const G2Certificate&);

}  // namespace kopt
