#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "kopt/extremal.hpp"
#include "kopt/io.hpp"

#ifndef KOPT_DEFAULT_CAGE_DIR
#define KOPT_DEFAULT_CAGE_DIR "data/cages"
#endif

namespace kopt {

const std::vector<CageEntry>& cage_catalog() {
  static const std::vector<CageEntry> catalog = {
      {3, 5, 10, "cage_3_5.txt"},    {4, 6, 26, "cage_4_6.txt"},   {3, 8, 30, "cage_3_8.txt"},
      {4, 8, 80, "cage_4_8.txt"},    {6, 8, 312, "cage_6_8.txt"},  {4, 12, 728, "cage_4_12.txt"},
  };
  return catalog;
}

std::string cage_directory() {
  if (const char* env = std::getenv("KOPT_CAGE_DIR"); env != nullptr && *env != '\0') return env;
  return KOPT_DEFAULT_CAGE_DIR;
}

std::optional<SimpleGraph> load_cage(int degree, int g) {
  for (const CageEntry& entry : cage_catalog()) {
    if (entry.degree != degree || entry.girth != g) continue;
    const std::string path = (std::filesystem::path(cage_directory()) / entry.file).string();
    SimpleGraph graph = read_edge_list(read_text_file(path));
    if (graph.num_vertices() != entry.vertices || graph.regular_degree() != degree ||
        girth(graph) != g) {
      throw InvalidInput("catalog file " + path + " does not hold a (" + std::to_string(degree) +
                         "," + std::to_string(g) + ")-cage");
    }
    return graph;
  }
  return std::nullopt;
}

std::int64_t existence_vertex_bound(int degree, int g) {
  using boost::multiprecision::cpp_int;
  if (degree < 3 || g < 3) throw InvalidInput("existence bound needs degree >= 3 and girth >= 3");
  cpp_int power = 1;
  for (int i = 0; i < g - 1; ++i) power *= (degree - 1);
  cpp_int m = (power - 1 + (degree - 2) - 1) / (degree - 2);
  const cpp_int vertices = 2 * m;
  if (vertices > cpp_int(std::int64_t{1} << 40)) return std::int64_t{1} << 40;
  return vertices.convert_to<std::int64_t>();
}

namespace {

std::int64_t moore_bound(int degree, int g) {
  std::int64_t total = 0;
  std::int64_t layer = 1;
  if (g % 2 == 1) {
    total = 1;
    for (int i = 0; i < (g - 1) / 2; ++i) {
      total += degree * layer;
      layer *= (degree - 1);
    }
  } else {
    for (int i = 0; i < g / 2; ++i) {
      total += 2 * layer;
      layer *= (degree - 1);
    }
  }
  return total;
}

// Edge-swap repair of a random pairing on a fixed vertex count. Edges live in a flat list that
// may temporarily hold loops and parallel edges; an edge is "bad" when it is a loop, has a
// parallel twin or lies on a cycle shorter than g.
class PairingRepair {
 public:
  PairingRepair(int n, int degree, int g, std::mt19937_64& rng)
      : n_(n), g_(g), rng_(rng) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < degree; ++i) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng_);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges_.push_back({stubs[i], stubs[i + 1]});
  }

  // Returns true once no edge is bad; `budget` is decremented per attempted swap.
  bool repair(std::int64_t& budget) {
    std::vector<int> bad = bad_edges();
    const int m = static_cast<int>(edges_.size());
    std::uniform_int_distribution<int> pick_edge(0, m - 1);
    while (!bad.empty()) {
      if (budget <= 0) return false;
      --budget;
      const int e1 = bad[std::uniform_int_distribution<int>(0, static_cast<int>(bad.size()) - 1)(rng_)];
      int e2 = pick_edge(rng_);
      if (e2 == e1) continue;
      const Edge old1 = edges_[e1];
      const Edge old2 = edges_[e2];
      if (rng_() & 1) {
        edges_[e1] = {old1.u, old2.u};
        edges_[e2] = {old1.v, old2.v};
      } else {
        edges_[e1] = {old1.u, old2.v};
        edges_[e2] = {old1.v, old2.u};
      }
      std::vector<int> candidate = bad_edges();
      if (candidate.size() <= bad.size()) {
        bad = std::move(candidate);
      } else {
        edges_[e1] = old1;
        edges_[e2] = old2;
      }
    }
    return true;
  }

  SimpleGraph graph() const {
    std::vector<Edge> normalized;
    for (const Edge& e : edges_) normalized.push_back(make_edge(e.u, e.v));
    return SimpleGraph::from_edges(n_, normalized);
  }

  // Girth of the current multigraph, counting loops as 1 and parallel pairs as 2.
  int current_girth() const {
    int best = -1;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      const int len = shortest_cycle_through(e, n_);
      if (len > 0 && (best < 0 || len < best)) best = len;
    }
    return best;
  }

 private:
  // Length of the shortest cycle using edge e, or -1 if none of length <= limit.
  int shortest_cycle_through(int e, int limit) const {
    const Edge target = edges_[e];
    if (target.u == target.v) return 1;
    std::vector<std::vector<std::pair<int, int>>> adj(n_);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      if (i == e) continue;
      adj[edges_[i].u].push_back({edges_[i].v, i});
      adj[edges_[i].v].push_back({edges_[i].u, i});
    }
    std::vector<int> dist(n_, -1);
    std::vector<int> queue{target.u};
    dist[target.u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (dist[u] + 1 >= limit) break;
      for (auto [w, id] : adj[u]) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        if (w == target.v) return dist[w] + 1;
        queue.push_back(w);
      }
    }
    return -1;
  }

  std::vector<int> bad_edges() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n_);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      adj[edges_[i].u].push_back({edges_[i].v, i});
      if (edges_[i].u != edges_[i].v) adj[edges_[i].v].push_back({edges_[i].u, i});
    }
    std::vector<int> bad;
    std::vector<int> dist(n_, -1);
    std::vector<int> queue;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      const Edge target = edges_[e];
      if (target.u == target.v) {
        bad.push_back(e);
        continue;
      }
      // Cycle through e shorter than g  <=>  path u..v avoiding e of length <= g-2.
      for (int v : queue) dist[v] = -1;
      queue.assign(1, target.u);
      dist[target.u] = 0;
      bool found = false;
      for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const int u = queue[head];
        if (dist[u] + 1 > g_ - 2) break;
        for (auto [w, id] : adj[u]) {
          if (id == e || dist[w] >= 0) continue;
          dist[w] = dist[u] + 1;
          queue.push_back(w);
          if (w == target.v) {
            found = true;
            break;
          }
        }
      }
      if (found) bad.push_back(e);
    }
    for (int v : queue) dist[v] = -1;
    return bad;
  }

  int n_;
  int g_;
  std::mt19937_64& rng_;
  std::vector<Edge> edges_;
};

SimpleGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return SimpleGraph::from_edges(n, edges);
}

}  // namespace

SimpleGraph regular_high_girth(int degree, int g, std::uint64_t seed, std::int64_t swap_budget) {
  if (degree < 2 || g < 3) throw InvalidInput("regular_high_girth needs degree >= 2 and g >= 3");
  SimpleGraph result;
  if (degree == 2) {
    result = cycle_graph(g);
  } else if (g == 3) {
    result = complete_graph(degree + 1);
  } else if (auto cage = load_cage(degree, g)) {
    result = std::move(*cage);
  } else {
    std::mt19937_64 rng(seed);
    const std::int64_t upper = existence_vertex_bound(degree, g);
    std::vector<std::int64_t> sizes;
    for (std::int64_t n = std::max<std::int64_t>(moore_bound(degree, g), degree + 1);;
         n += std::max<std::int64_t>(2, n / 4)) {
      n = std::min(n, upper);
      if ((n * degree) % 2 == 1) ++n;
      if (n > kDefaultVertexLimit) break;
      sizes.push_back(n);
      if (n >= upper) break;
    }
    // Each size gets an equal share of the swap budget, so a hard size near the Moore bound
    // cannot starve the larger, easier ones.
    const std::int64_t share =
        sizes.empty() ? 0 : std::max<std::int64_t>(1, swap_budget / static_cast<std::int64_t>(sizes.size()));
    int best_girth = 0;
    bool done = false;
    for (const std::int64_t n : sizes) {
      std::int64_t budget = share;
      PairingRepair repair(static_cast<int>(n), degree, g, rng);
      if (repair.repair(budget)) {
        result = repair.graph();
        done = true;
        break;
      }
      best_girth = std::max(best_girth, repair.current_girth());
    }
    if (!done) {
      throw GirthSearchExhausted("no " + std::to_string(degree) + "-regular graph of girth >= " +
                                     std::to_string(g) + " found within the swap budget; best girth " +
                                     std::to_string(best_girth),
                                 best_girth);
    }
  }
  const auto achieved = girth(result);
  if (result.regular_degree() != degree || (achieved && *achieved < g)) {
    throw InvariantViolation("generated graph failed re-verification");
  }
  return result;
}

}  // namespace kopt
