#include "kopt/tour.hpp"

#include <algorithm>
#include <string>

#include "kopt/error.hpp"

namespace kopt {

void throw_dimension_mismatch(int instance_size, int tour_size) {
  throw InvalidInput("tour has " + std::to_string(tour_size) + " vertices, instance has " +
                     std::to_string(instance_size));
}

Tour::Tour(std::vector<int> order) : order_(std::move(order)) {
  const int n = size();
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order_[i];
    if (v < 0 || v >= n) throw InvalidInput("tour vertex out of range: " + std::to_string(v));
    if (pos_[v] >= 0) throw InvalidInput("tour visits vertex " + std::to_string(v) + " twice");
    pos_[v] = i;
  }
}

Tour Tour::identity(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return Tour(std::move(order));
}

Tour Tour::from_edges(int n, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != n) {
    throw InvalidInput("a tour on " + std::to_string(n) + " vertices needs " + std::to_string(n) +
                       " edges, got " + std::to_string(edges.size()));
  }
  if (n == 0) return Tour();
  if (n == 1) {
    if (edges[0].u != 0 || edges[0].v != 0) throw InvalidInput("invalid single-vertex tour");
    return identity(1);
  }
  std::vector<int> nb(2 * static_cast<std::size_t>(n), -1);
  auto attach = [&](int a, int b) {
    if (a < 0 || a >= n) throw InvalidInput("tour edge endpoint out of range");
    if (nb[2 * a] < 0) {
      nb[2 * a] = b;
    } else if (nb[2 * a + 1] < 0) {
      nb[2 * a + 1] = b;
    } else {
      throw InvalidInput("vertex " + std::to_string(a) + " has degree above two");
    }
  };
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidInput("self-loop in tour edge set");
    attach(e.u, e.v);
    attach(e.v, e.u);
  }
  std::vector<int> order;
  order.reserve(n);
  int prev = -1;
  int cur = 0;
  const int first_step = std::min(nb[0], nb[1]);
  for (int step = 0; step < n; ++step) {
    order.push_back(cur);
    int nxt;
    if (step == 0) {
      nxt = first_step;
    } else {
      nxt = nb[2 * cur] == prev ? nb[2 * cur + 1] : nb[2 * cur];
      if (n == 2) nxt = prev;
    }
    prev = cur;
    cur = nxt;
    if (cur < 0) throw InvalidInput("vertex with degree below two in tour edge set");
  }
  if (cur != 0) throw InvalidInput("tour edge set does not close into one cycle");
  for (int v : order) {
    if (nb[2 * v] < 0 || nb[2 * v + 1] < 0) throw InvalidInput("vertex with degree below two");
  }
  Tour out(std::move(order));  // throws if a vertex repeats, i.e. the edges form several cycles
  return out;
}

int Tour::next(int v) const {
  const int i = pos_[v] + 1;
  return order_[i == size() ? 0 : i];
}

int Tour::prev(int v) const {
  const int i = pos_[v];
  return order_[i == 0 ? size() - 1 : i - 1];
}

bool Tour::has_edge(int u, int v) const { return next(u) == v || prev(u) == v; }

Edge Tour::edge(int i) const { return make_edge(order_[i], order_[i + 1 == size() ? 0 : i + 1]); }

std::vector<Edge> Tour::edges() const {
  std::vector<Edge> out;
  out.reserve(order_.size());
  for (int i = 0; i < size(); ++i) out.push_back(edge(i));
  return out;
}

Tour Tour::canonical() const {
  const int n = size();
  if (n <= 2) {
    return n == 0 ? Tour() : Tour(n == 1 ? std::vector<int>{0} : std::vector<int>{0, 1});
  }
  const int start = pos_[0];
  const bool forward = order_[(start + 1) % n] < order_[(start + n - 1) % n];
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = forward ? order_[(start + i) % n] : order_[(start - i + n) % n];
  }
  return Tour(std::move(out));
}

bool Tour::same_cycle(const Tour& other) const { return canonical() == other.canonical(); }

}  // namespace kopt
