#pragma once

#include <string>
#include <vector>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"

namespace kopt {

// A Hamiltonian cycle stored as a vertex permutation read cyclically.
// Tour edge i joins order[i] and order[i+1 mod n].
class Tour {
 public:
  Tour() = default;

  // Throws InvalidInput unless order is a permutation of 0..n-1.
  explicit Tour(std::vector<int> order);

  static Tour identity(int n);

  // Builds the tour from an edge set in which every vertex of 0..n-1 has degree two and the
  // edges form one cycle. Throws InvalidInput otherwise. Starts at vertex 0 towards its smaller
  // neighbour.
  static Tour from_edges(int n, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int operator[](int i) const { return order_[i]; }
  int position(int v) const { return pos_[v]; }
  int next(int v) const;
  int prev(int v) const;
  bool has_edge(int u, int v) const;

  // Normalized tour edge i.
  Edge edge(int i) const;
  std::vector<Edge> edges() const;

  // Rotated so order[0] = 0 and oriented so order[1] < order[n-1].
  Tour canonical() const;
  bool same_cycle(const Tour& other) const;

  bool operator==(const Tour& other) const { return order_ == other.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

[[noreturn]] void throw_dimension_mismatch(int instance_size, int tour_size);

template <TspInstance I>
Cost tour_cost(const I& instance, const Tour& tour) {
  const int n = tour.size();
  if (n != instance.size()) {
    throw_dimension_mismatch(instance.size(), n);
  }
  Cost total = 0;
  for (int i = 0; i < n; ++i) {
    total += instance.cost(tour[i], tour[i + 1 == n ? 0 : i + 1]);
  }
  return total;
}

}  // namespace kopt
