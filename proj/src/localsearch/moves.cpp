#include "kopt/moves.hpp"

#include <algorithm>

#include "kopt/error.hpp"

namespace kopt {

Tour apply_move(const Tour& tour, const KMove& move) {
  if (move.removed.size() != move.added.size()) {
    throw InvalidInput("a move must add as many edges as it removes");
  }
  std::vector<Edge> removed = move.removed;
  std::vector<Edge> added = move.added;
  for (Edge& e : removed) e = make_edge(e.u, e.v);
  for (Edge& e : added) e = make_edge(e.u, e.v);
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end() ||
      std::adjacent_find(added.begin(), added.end()) != added.end()) {
    throw InvalidInput("a move lists an edge twice");
  }
  const int n = tour.size();
  for (const Edge& e : removed) {
    if (e.u < 0 || e.v >= n || !tour.has_edge(e.u, e.v)) {
      throw InvalidInput("removed edge is not a tour edge");
    }
  }
  for (const Edge& e : added) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw InvalidInput("added edge is invalid");
    if (tour.has_edge(e.u, e.v)) throw InvalidInput("added edge is already a tour edge");
  }
  std::vector<Edge> edges;
  edges.reserve(n);
  for (const Edge& e : tour.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) edges.push_back(e);
  }
  edges.insert(edges.end(), added.begin(), added.end());
  return Tour::from_edges(n, edges);
}

bool is_tour_after_exchange(const Tour& tour, const std::vector<Edge>& removed,
                            const std::vector<Edge>& added) {
  const int r = static_cast<int>(removed.size());
  if (static_cast<int>(added.size()) != r) return false;
  if (r == 0) return true;
  const int n = tour.size();

  // Tour position of each removed edge: edge p joins order[p] and order[p+1].
  std::vector<int> positions;
  positions.reserve(r);
  for (const Edge& e : removed) {
    positions.push_back(tour.next(e.u) == e.v ? tour.position(e.u) : tour.position(e.v));
  }
  std::sort(positions.begin(), positions.end());

  // Segment j runs from order[p_j + 1] to order[p_{j+1}].
  struct Segment {
    int first;
    int last;
  };
  std::vector<Segment> segments(r);
  std::vector<std::pair<int, int>> owner;  // (vertex, segment)
  owner.reserve(2 * r);
  for (int j = 0; j < r; ++j) {
    const int first = tour[(positions[j] + 1) % n];
    const int last = tour[positions[(j + 1) % r]];
    segments[j] = {first, last};
    owner.push_back({first, j});
    if (last != first) owner.push_back({last, j});
  }
  std::sort(owner.begin(), owner.end());
  auto segment_of = [&](int v) -> int {
    auto it = std::lower_bound(owner.begin(), owner.end(), std::make_pair(v, -1));
    return (it != owner.end() && it->first == v) ? it->second : -1;
  };

  // Added edges incident to each segment end; a single-vertex segment needs two, others one.
  std::vector<std::pair<int, int>> incident;  // (vertex, added edge id)
  incident.reserve(2 * r);
  for (int id = 0; id < r; ++id) {
    if (added[id].u == added[id].v) return false;
    incident.push_back({added[id].u, id});
    incident.push_back({added[id].v, id});
  }
  std::sort(incident.begin(), incident.end());
  for (std::size_t i = 0; i < incident.size();) {
    std::size_t j = i;
    while (j < incident.size() && incident[j].first == incident[i].first) ++j;
    const int s = segment_of(incident[i].first);
    if (s < 0) return false;
    const int needed = segments[s].first == segments[s].last ? 2 : 1;
    if (static_cast<int>(j - i) != needed) return false;
    i = j;
  }
  auto other_added = [&](int v, int skip) -> int {
    auto it = std::lower_bound(incident.begin(), incident.end(), std::make_pair(v, -1));
    for (; it != incident.end() && it->first == v; ++it) {
      if (it->second != skip) return it->second;
    }
    return -1;
  };

  // Walk: enter segment 0 at its first vertex, leave at its last, follow the added edge.
  int visited = 0;
  int seg = 0;
  int exit_vertex = segments[0].last;
  int via = -1;
  std::vector<char> seen(r, 0);
  while (true) {
    if (seen[seg]) return false;
    seen[seg] = 1;
    ++visited;
    const int id = other_added(exit_vertex, via);
    if (id < 0) return false;
    const int w = added[id].u == exit_vertex ? added[id].v : added[id].u;
    const int next = segment_of(w);
    if (next == 0 && w == segments[0].first) break;
    if (next < 0) return false;
    seg = next;
    via = id;
    exit_vertex = segments[seg].first == w ? segments[seg].last : segments[seg].first;
    if (segments[seg].first == segments[seg].last) exit_vertex = w;
  }
  return visited == r;
}

}  // namespace kopt
