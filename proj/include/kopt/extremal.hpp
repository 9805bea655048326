#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kopt/error.hpp"
#include "kopt/graph.hpp"

namespace kopt {

// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const SimpleGraph& graph);

inline constexpr int kExBruteforceMaxVertices = 9;

struct ExtremalGraph {
  std::int64_t edges = 0;
  SimpleGraph witness;
};

// Maximum edge count of an n-vertex graph with girth at least `min_girth`, by exhaustive
// branch and bound over labeled graphs. Throws InvalidInput for n above 9 or min_girth < 3.
ExtremalGraph ex_bruteforce(int n, int min_girth);

// Exact check of |E| < n^{1+1/(k-1)} / 2^{1+1/(k-1)} + n/2 for a graph of girth >= 2k, k >= 2.
bool alon_bound_holds(std::int64_t n, std::int64_t edges, int k);

struct CageEntry {
  int degree = 0;
  int girth = 0;
  int vertices = 0;
  std::string file;
};

const std::vector<CageEntry>& cage_catalog();

// Directory holding the catalog files: $KOPT_CAGE_DIR if set, otherwise the build default.
std::string cage_directory();

// Catalog graph with exactly this degree and girth, if one is shipped.
std::optional<SimpleGraph> load_cage(int degree, int girth);

// Vertex count 2m with m = ceil(((d-1)^{g-1} - 1) / (d-2)), the size at which a d-regular
// graph of girth >= g is guaranteed to exist (d >= 3).
std::int64_t existence_vertex_bound(int degree, int girth);

class GirthSearchExhausted : public BudgetExceeded {
 public:
  GirthSearchExhausted(const std::string& message, int best_girth)
      : BudgetExceeded(message), best_girth_(best_girth) {}
  int best_girth() const { return best_girth_; }

 private:
  int best_girth_;
};

inline constexpr std::int64_t kDefaultSwapBudget = 200000;

// A degree-regular graph with girth >= g: the catalog cage when one matches exactly, otherwise
// a seeded random pairing repaired by edge swaps. The result is always re-verified.
// Throws GirthSearchExhausted when the swap budget runs out.
SimpleGraph regular_high_girth(int degree, int g, std::uint64_t seed,
                               std::int64_t swap_budget = kDefaultSwapBudget);

// Vertex u keeps id u, its copy u' gets id n+u; edge {u,v} becomes {u,v'} and {u',v}.
// Throws InvalidInput unless the input is regular.
SimpleGraph bipartite_double_cover(const SimpleGraph& graph);

struct EulerianSubgraph {
  SimpleGraph graph;
  // original[i] is the input vertex that became vertex i, in increasing order.
  std::vector<int> original;
};

// Peels lexicographically-first DFS cycles into a new graph and returns its component with the
// largest edge/vertex ratio (ties: smallest vertex id).
EulerianSubgraph eulerian_subgraph(const SimpleGraph& graph);

// Closed walk v0..v_{m-1} (returning to v0) using every edge once, starting at the smallest
// non-isolated vertex and always leaving through the smallest unused edge.
// Throws InvalidInput on an odd degree or when the edges are not connected.
std::vector<int> eulerian_walk(const SimpleGraph& graph);

// Proper edge coloring with colors 0..maxdeg-1, indexed like graph.edges().
// Throws InvalidInput on a non-bipartite graph.
std::vector<int> bipartite_edge_coloring(const SimpleGraph& graph);

}  // namespace kopt
