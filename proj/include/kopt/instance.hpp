#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "kopt/graph.hpp"

namespace kopt {

using Cost = std::int64_t;

inline constexpr int kDefaultVertexLimit = 20000;

// Row-major square matrix as supplied by a caller, before validation.
using CostMatrix = std::vector<std::vector<Cost>>;

// c(x,z) + c(z,y) < c(x,y), reported with x < y.
struct TriangleViolation {
  int x = 0;
  int z = 0;
  int y = 0;

  auto operator<=>(const TriangleViolation&) const = default;
};

struct MetricCheck {
  // Shape, symmetry, sign and diagonal problems; when non-empty the triangle scan is skipped.
  std::vector<std::string> structural;
  std::vector<TriangleViolation> violations;

  bool ok() const { return structural.empty() && violations.empty(); }
};

MetricCheck validate_metric(const CostMatrix& matrix);

// Complete graph with a dense symmetric integer cost matrix satisfying the triangle inequality.
class MetricInstance {
 public:
  MetricInstance() = default;

  // Runs validate_metric and throws InvalidInput describing the first problem found.
  explicit MetricInstance(const CostMatrix& matrix, int vertex_limit = kDefaultVertexLimit);

  // Skips the cubic triangle scan; only for matrices that are metric by construction.
  static MetricInstance from_trusted(int n, std::vector<Cost> row_major);

  int size() const { return n_; }
  Cost cost(int u, int v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  CostMatrix matrix() const;

  bool operator==(const MetricInstance&) const = default;

 private:
  int n_ = 0;
  std::vector<Cost> data_;
};

// Graph TSP instance: a connected graph with its hop-distance metric.
class GraphInstance {
 public:
  GraphInstance() = default;

  int size() const { return n_; }
  Cost cost(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  const SimpleGraph& graph() const { return graph_; }
  MetricInstance metric() const;

  bool operator==(const GraphInstance& other) const { return graph_ == other.graph_; }

 private:
  friend GraphInstance graph_metric(const SimpleGraph& graph);

  int n_ = 0;
  SimpleGraph graph_;
  std::vector<std::int32_t> dist_;
};

// (1,2)-TSP instance: listed unit edges cost 1, every other pair of distinct vertices costs 2.
class OneTwoInstance {
 public:
  OneTwoInstance() = default;
  OneTwoInstance(int n, const std::vector<Edge>& unit_edges);
  explicit OneTwoInstance(SimpleGraph unit_graph) : unit_(std::move(unit_graph)) {}

  int size() const { return unit_.num_vertices(); }
  Cost cost(int u, int v) const { return u == v ? 0 : (unit_.has_edge(u, v) ? 1 : 2); }
  bool is_unit(int u, int v) const { return u != v && unit_.has_edge(u, v); }
  const std::vector<int>& unit_neighbors(int v) const { return unit_.neighbors(v); }
  const SimpleGraph& unit_graph() const { return unit_; }

  bool operator==(const OneTwoInstance&) const = default;

 private:
  SimpleGraph unit_;
};

template <class I>
concept TspInstance = requires(const I& inst, int u, int v) {
  { inst.size() } -> std::convertible_to<int>;
  { inst.cost(u, v) } -> std::convertible_to<Cost>;
};

// Hop-distance metric of a connected graph; throws InvalidInput if disconnected.
GraphInstance graph_metric(const SimpleGraph& graph);

// Appends a copy v' of v (new id n) with c(v,v') = 0 and c(v',w) = c(v,w).
MetricInstance duplicate_vertex(const MetricInstance& instance, int v);

}  // namespace kopt
