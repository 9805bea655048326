#include "kopt/lin_kernighan.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "kopt/error.hpp"
#include "kopt/moves.hpp"

namespace kopt {

template <TspInstance I>
Cost gain(const I& instance, const Tour& tour, const AlternatingWalk& walk) {
  const auto& x = walk.vertices;
  if (x.empty() || x.size() % 2 == 0) {
    throw InvalidInput("an alternating walk needs an even number of edges");
  }
  const int n = tour.size();
  for (int v : x) {
    if (v < 0 || v >= n) throw InvalidInput("walk vertex out of range");
  }
  Cost total = 0;
  for (std::size_t j = 1; j < x.size(); ++j) {
    const int a = x[j - 1];
    const int b = x[j];
    if (a == b) throw InvalidInput("walk contains a loop");
    const bool tour_edge = tour.has_edge(a, b);
    if (j % 2 == 1) {
      if (!tour_edge) throw InvalidInput("walk edge " + std::to_string(j) + " must be a tour edge");
      total += instance.cost(a, b);
    } else {
      if (tour_edge) throw InvalidInput("walk edge " + std::to_string(j) + " must not be a tour edge");
      total -= instance.cost(a, b);
    }
  }
  return total;
}

template <TspInstance I>
bool is_proper(const I& instance, const Tour& tour, const AlternatingWalk& walk) {
  gain(instance, tour, walk);  // validates
  const auto& x = walk.vertices;
  Cost partial = 0;
  for (std::size_t j = 1; j < x.size(); ++j) {
    const Cost c = instance.cost(x[j - 1], x[j]);
    partial += (j % 2 == 1) ? c : -c;
    if (j % 2 == 0 && partial <= 0) return false;
  }
  return true;
}

namespace {

// T △ E(walk) as an exchange, when the result is a tour.
std::optional<KMove> exchange_if_tour(const Tour& tour, const std::vector<int>& walk) {
  std::vector<Edge> edges;
  edges.reserve(walk.size());
  for (std::size_t j = 1; j < walk.size(); ++j) {
    if (walk[j - 1] == walk[j]) return std::nullopt;
    edges.push_back(make_edge(walk[j - 1], walk[j]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  KMove move;
  for (const Edge& e : edges) {
    (tour.has_edge(e.u, e.v) ? move.removed : move.added).push_back(e);
  }
  if (move.removed.size() != move.added.size()) return std::nullopt;
  if (!is_tour_after_exchange(tour, move.removed, move.added)) return std::nullopt;
  return move;
}

struct Candidate {
  Cost partial_gain;
  int vertex;
};

void sort_candidates(std::vector<Candidate>& c) {
  std::sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) {
    return a.partial_gain != b.partial_gain ? a.partial_gain > b.partial_gain : a.vertex < b.vertex;
  });
}

}  // namespace

template <TspInstance I>
Tour lin_kernighan(const I& instance, Tour tour, int p1, int p2, std::vector<Cost>* cost_trace) {
  if (p1 < 1 || p2 < 0) throw InvalidInput("Lin-Kernighan needs p1 >= 1 and p2 >= 0");
  const int n = tour.size();
  Cost cost = tour_cost(instance, tour);
  if (cost_trace) cost_trace->push_back(cost);
  if (n < 4) return tour;

  std::vector<std::vector<Candidate>> X;  // X[i], consumed from head[i]
  std::vector<std::size_t> head;
  std::vector<int> x;
  std::vector<Cost> G;  // G[i] = g(x_0..x_i)
  std::vector<int> scratch;

  auto in_path = [&](int i, int a, int b) {
    for (int j = 1; j <= i; ++j) {
      if ((x[j - 1] == a && x[j] == b) || (x[j - 1] == b && x[j] == a)) return true;
    }
    return false;
  };
  auto set_candidates = [&](int depth, std::vector<Candidate> c) {
    sort_candidates(c);
    if (static_cast<int>(X.size()) <= depth) {
      X.resize(depth + 1);
      head.resize(depth + 1);
    }
    X[depth] = std::move(c);
    head[depth] = 0;
  };

  Cost g_star = 0;
  KMove best;
  int i = 0;
  auto reset = [&] {
    std::vector<Candidate> all(n);
    for (int v = 0; v < n; ++v) all[v] = {0, v};
    set_candidates(0, std::move(all));
    i = 0;
    g_star = 0;
  };
  reset();

  while (i >= 0) {
    if (head[i] == X[i].size()) {
      if (g_star > 0) {
        tour = apply_move(tour, best);
        const Cost next = tour_cost(instance, tour);
        if (next != cost - g_star) {
          throw InvariantViolation("Lin-Kernighan augmentation changed the cost unexpectedly");
        }
        cost = next;
        if (cost_trace) cost_trace->push_back(cost);
        reset();
      } else {
        i = std::min(i - 1, p1);
      }
      continue;
    }
    x.resize(i + 1);
    G.resize(i + 1);
    x[i] = X[i][head[i]++].vertex;
    if (i == 0) {
      G[0] = 0;
    } else {
      const Cost c = instance.cost(x[i - 1], x[i]);
      G[i] = G[i - 1] + (i % 2 == 1 ? c : -c);
    }
    const int xi = x[i];
    const int x0 = x[0];
    std::vector<Candidate> next;

    if (i % 2 == 1) {
      if (i >= 3 && xi != x0) {
        const Cost closing = G[i] - instance.cost(xi, x0);
        if (closing > g_star) {
          scratch.assign(x.begin(), x.end());
          scratch.push_back(x0);
          if (auto move = exchange_if_tour(tour, scratch)) {
            best = std::move(*move);
            best.delta = -closing;
            g_star = closing;
          }
        }
      }
      for (int v = 0; v < n; ++v) {
        if (v == x0 || v == xi || tour.has_edge(xi, v) || in_path(i, xi, v)) continue;
        const Cost g = G[i] - instance.cost(xi, v);
        if (g > g_star) next.push_back({g, v});
      }
    } else {
      for (int v : {tour.prev(xi), tour.next(xi)}) {
        if (in_path(i, xi, v)) continue;
        if (i > p2) {
          if (v == x0 || tour.has_edge(v, x0) || in_path(i, v, x0)) continue;
          scratch.assign(x.begin(), x.end());
          scratch.push_back(v);
          scratch.push_back(x0);
          if (!exchange_if_tour(tour, scratch)) continue;
        }
        next.push_back({G[i] + instance.cost(xi, v), v});
      }
    }
    set_candidates(i + 1, std::move(next));
    ++i;
  }
  return tour;
}

#define KOPT_INSTANTIATE(I)                                                        \
  template Cost gain<I>(const I&, const Tour&, const AlternatingWalk&);       \
  template bool is_proper<I>(const I&, const Tour&, const AlternatingWalk&);  \
  template Tour lin_kernighan<I>(const I&, Tour, int, int, std::vector<Cost>*);

KOPT_INSTANTIATE(MetricInstance)
KOPT_INSTANTIATE(GraphInstance)
KOPT_INSTANTIATE(OneTwoInstance)

}  // namespace kopt
