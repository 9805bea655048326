#include "kopt/instance.hpp"

#include <deque>
#include <string>

#include "kopt/error.hpp"

namespace kopt {

MetricCheck validate_metric(const CostMatrix& matrix) {
  MetricCheck check;
  const int n = static_cast<int>(matrix.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) {
      check.structural.push_back("row " + std::to_string(i) + " has " +
                                 std::to_string(matrix[i].size()) + " entries, expected " +
                                 std::to_string(n));
    }
  }
  if (!check.structural.empty()) return check;

  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 0) {
      check.structural.push_back("nonzero diagonal entry at " + std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] < 0) {
        check.structural.push_back("negative entry at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
      }
      if (i < j && matrix[i][j] != matrix[j][i]) {
        check.structural.push_back("asymmetric pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
      }
    }
  }
  if (!check.structural.empty()) return check;

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const Cost direct = matrix[x][y];
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (matrix[x][z] + matrix[z][y] < direct) check.violations.push_back({x, z, y});
      }
    }
  }
  return check;
}

MetricInstance::MetricInstance(const CostMatrix& matrix, int vertex_limit) {
  const int n = static_cast<int>(matrix.size());
  if (n > vertex_limit) {
    throw InvalidInput("instance has " + std::to_string(n) + " vertices, limit is " +
                       std::to_string(vertex_limit));
  }
  const MetricCheck check = validate_metric(matrix);
  if (!check.structural.empty()) throw InvalidInput(check.structural.front());
  if (!check.violations.empty()) {
    const auto& t = check.violations.front();
    throw InvalidInput("triangle inequality violated by (" + std::to_string(t.x) + "," +
                       std::to_string(t.z) + "," + std::to_string(t.y) + ")");
  }
  n_ = n;
  data_.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : matrix) data_.insert(data_.end(), row.begin(), row.end());
}

MetricInstance MetricInstance::from_trusted(int n, std::vector<Cost> row_major) {
  if (n < 0 || row_major.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidInput("matrix size does not match vertex count");
  }
  MetricInstance out;
  out.n_ = n;
  out.data_ = std::move(row_major);
  return out;
}

CostMatrix MetricInstance::matrix() const {
  CostMatrix out(n_, std::vector<Cost>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i][j] = cost(i, j);
  }
  return out;
}

MetricInstance GraphInstance::metric() const {
  return MetricInstance::from_trusted(n_, std::vector<Cost>(dist_.begin(), dist_.end()));
}

OneTwoInstance::OneTwoInstance(int n, const std::vector<Edge>& unit_edges)
    : unit_(SimpleGraph::from_edges(n, unit_edges)) {}

GraphInstance graph_metric(const SimpleGraph& graph) {
  const int n = graph.num_vertices();
  if (n > kDefaultVertexLimit) {
    throw InvalidInput("graph has " + std::to_string(n) + " vertices, limit is " +
                       std::to_string(kDefaultVertexLimit));
  }
  if (!is_connected(graph)) throw InvalidInput("graph metric requires a connected graph");
  GraphInstance out;
  out.n_ = n;
  out.graph_ = graph;
  out.dist_.assign(static_cast<std::size_t>(n) * n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::int32_t* row = out.dist_.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : graph.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

MetricInstance duplicate_vertex(const MetricInstance& instance, int v) {
  const int n = instance.size();
  if (v < 0 || v >= n) throw InvalidInput("vertex out of range: " + std::to_string(v));
  std::vector<Cost> data(static_cast<std::size_t>(n + 1) * (n + 1));
  auto at = [&](int i, int j) -> Cost& { return data[static_cast<std::size_t>(i) * (n + 1) + j]; };
  for (int i = 0; i <= n; ++i) {
    const int si = i == n ? v : i;
    for (int j = 0; j <= n; ++j) {
      const int sj = j == n ? v : j;
      at(i, j) = instance.cost(si, sj);
    }
  }
  return MetricInstance::from_trusted(n + 1, std::move(data));
}

}  // namespace kopt
