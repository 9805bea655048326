#include "kopt/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "kopt/error.hpp"

namespace kopt {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  adj_.resize(n);
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) + " " +
                         std::to_string(e.v));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidInput("duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.num_edges_ = static_cast<std::int64_t>(edges.size());
  return g;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int SimpleGraph::add_vertex() {
  adj_.emplace_back();
  return num_vertices() - 1;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw InvalidInput("edge endpoint out of range");
  }
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  auto& lu = adj_[u];
  auto it = std::lower_bound(lu.begin(), lu.end(), v);
  if (it != lu.end() && *it == v) {
    throw InvalidInput("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  lu.insert(it, v);
  auto& lv = adj_[v];
  lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
  ++num_edges_;
}

int SimpleGraph::regular_degree() const {
  if (adj_.empty()) return -1;
  const int d = degree(0);
  for (int v = 1; v < num_vertices(); ++v) {
    if (degree(v) != d) return -1;
  }
  return d;
}

bool is_connected(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::vector<int> bipartition(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return {};
        }
      }
    }
  }
  return side;
}

int MultiDigraph::add_arc(int tail, int head, int label) {
  if (tail < 0 || head < 0 || tail >= n_ || head >= n_) {
    throw InvalidInput("arc endpoint out of range");
  }
  if (!labels_.insert(label).second) {
    throw InvalidInput("duplicate arc label " + std::to_string(label));
  }
  arcs_.push_back({tail, head, label});
  return num_arcs() - 1;
}

}  // namespace kopt
