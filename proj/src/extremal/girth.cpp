#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "kopt/extremal.hpp"

namespace kopt {

std::optional<int> girth(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  int best = -1;
  std::vector<int> dist(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> touched;
  std::vector<int> queue;
  for (int root = 0; root < n && best != 3; ++root) {
    for (int v : touched) dist[v] = -1;
    touched.assign(1, root);
    queue.assign(1, root);
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      // Any cycle found below this depth is no shorter than the current best.
      if (best >= 0 && 2 * dist[u] + 1 >= best) break;
      for (int w : graph.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (w != parent[u]) {
          const int length = dist[u] + dist[w] + 1;
          if (best < 0 || length < best) best = length;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

using Mask = std::uint16_t;

class ExSearch {
 public:
  ExSearch(int n, int min_girth, std::int64_t target)
      : n_(n), g_(min_girth), target_(target) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs_.push_back({u, v});
    }
    adj_.fill(0);
  }

  ExtremalGraph run() {
    dfs(0);
    std::vector<Edge> edges;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (best_adj_[u] & (1u << v)) edges.push_back({u, v});
      }
    }
    return {best_, SimpleGraph::from_edges(n_, edges)};
  }

 private:
  // Adding {u,v} keeps girth >= g iff dist(u,v) >= g-1 in the current graph.
  bool addable(int u, int v) const {
    Mask reach = static_cast<Mask>(1u << u);
    Mask frontier = reach;
    for (int depth = 0; depth < g_ - 2 && frontier; ++depth) {
      Mask next = 0;
      for (int w = 0; w < n_; ++w) {
        if (frontier & (1u << w)) next |= adj_[w];
      }
      frontier = static_cast<Mask>(next & ~reach);
      reach |= next;
      if (reach & (1u << v)) return false;
    }
    return !(reach & (1u << v));
  }

  void dfs(std::size_t idx) {
    if (count_ > best_) {
      best_ = count_;
      best_adj_ = adj_;
    }
    if (best_ >= target_) return;
    std::int64_t available = 0;
    for (std::size_t i = idx; i < pairs_.size(); ++i) {
      if (addable(pairs_[i].u, pairs_[i].v)) ++available;
    }
    if (count_ + available <= best_) return;
    for (std::size_t i = idx; i < pairs_.size(); ++i) {
      const auto [u, v] = pairs_[i];
      if (!addable(u, v)) continue;
      adj_[u] |= static_cast<Mask>(1u << v);
      adj_[v] |= static_cast<Mask>(1u << u);
      ++count_;
      dfs(i + 1);
      --count_;
      adj_[u] &= static_cast<Mask>(~(1u << v));
      adj_[v] &= static_cast<Mask>(~(1u << u));
      if (best_ >= target_) return;
      // Excluding edges i..j-1 leaves at most the addable edges after them.
      --available;
      if (count_ + available <= best_) return;
    }
  }

  int n_;
  int g_;
  std::int64_t target_;
  std::vector<Edge> pairs_;
  std::array<Mask, kExBruteforceMaxVertices> adj_{};
  std::array<Mask, kExBruteforceMaxVertices> best_adj_{};
  std::int64_t count_ = 0;
  std::int64_t best_ = -1;
};

}  // namespace

ExtremalGraph ex_bruteforce(int n, int min_girth) {
  if (n < 0 || n > kExBruteforceMaxVertices) {
    throw InvalidInput("ex_bruteforce supports at most " +
                       std::to_string(kExBruteforceMaxVertices) + " vertices");
  }
  if (min_girth < 3) throw InvalidInput("girth bound must be at least 3");
  // Deleting each vertex in turn counts every edge n-2 times, so
  // ex(n) <= floor(n * ex(n-1) / (n-2)); reaching that value ends the search early.
  std::int64_t target = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n >= 3) {
    const std::int64_t smaller = ex_bruteforce(n - 1, min_girth).edges;
    target = std::min(target, n * smaller / (n - 2));
  }
  return ExSearch(n, min_girth, target).run();
}

bool alon_bound_holds(std::int64_t n, std::int64_t edges, int k) {
  using boost::multiprecision::cpp_int;
  if (k < 2) throw InvalidInput("the bound needs k >= 2");
  // |E| - n/2 < (n/2)^{k/(k-1)}  <=>  (2|E| - n)^{k-1} * 2 < n^k  when 2|E| > n.
  const std::int64_t lhs_base = 2 * edges - n;
  if (lhs_base <= 0) return true;
  cpp_int lhs = 2;
  cpp_int rhs = 1;
  for (int i = 0; i < k - 1; ++i) lhs *= lhs_base;
  for (int i = 0; i < k; ++i) rhs *= n;
  return lhs < rhs;
}

}  // namespace kopt
