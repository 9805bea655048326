#pragma once

// Lower-bound constructions: a Graph TSP instance whose marking-walk tour is k-optimal, its
// chained extension, and a (1,2)-TSP instance built from a 4-regular high-girth graph by gadget
// substitution. Each builder returns the instance, the engineered tour and a cheap witness tour.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"
#include "kopt/tour.hpp"

namespace kopt {

// Reduced fraction with a positive denominator.
class Ratio {
 public:
  Ratio() = default;
  Ratio(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  std::string to_string() const;
  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

template <class I>
struct ConstructionBundle {
  I instance;
  Tour engineered_tour;
  Tour witness_tour;
  std::vector<std::pair<std::string, std::int64_t>> params;  // in construction order
  std::string provenance;

  Cost engineered_cost() const { return tour_cost(instance, engineered_tour); }
  Cost witness_cost() const { return tour_cost(instance, witness_tour); }
  // c(engineered) / c(witness), a lower bound on the approximation ratio of the engineered tour.
  Ratio ratio_floor() const { return Ratio(engineered_cost(), witness_cost()); }
  std::int64_t param(const std::string& key) const;
};

using GraphBundle = ConstructionBundle<GraphInstance>;
using OneTwoBundle = ConstructionBundle<OneTwoInstance>;

// Marking walk over an Eulerian walk of a 2f-regular connected base graph of girth >= 2kf.
// Vertices marked twice are cloned (clone ids follow the base ids in creation order, each clone
// adjacent to the base neighbours of its original); leftover vertices are marked at their
// first occurrence. The engineered tour costs exactly f·|V(base)|.
// Throws InvalidInput if f < 1, k < 1 or the base graph misses a precondition.
GraphBundle build_graph_tsp_lower(int f, int k, const SimpleGraph& base);

// a copies of the bundle's graph chained at vertex 0 of each copy, followed by a path of b extra
// vertices. The tour visits the copies in order and costs a·c(T) + 2(a+b-1).
GraphBundle extend_graph_tsp(const GraphBundle& bundle, int a, int b);

inline constexpr int kGadgetSize = 10;

struct Gadget {
  SimpleGraph graph;
  std::array<int, 4> colour_vertex;  // gadget vertex carrying colour c
};

// w0..w9 with the eight edges w0w1, w0w4, w2w3, w3w4, w5w9, w5w6, w6w7, w8w9; colours 0..3 sit
// on w1, w2, w7, w8.
Gadget gadget_S();

// Gadget copy h occupies v_{10h}..v_{10h+9}. Unit edges: the gadget edges, one edge per base
// edge joining the vertices of its colour in the two copies, and the in-copy links
// v_{10h+j}v_{10h+j+1} for j = 1, 4, 7. The engineered tour is v_0, v_1, ..., v_{10s-1}.
// A non-bipartite base is replaced by its bipartite double cover first.
// Throws InvalidInput unless the base is 4-regular with girth >= g and g >= 2k+1.
OneTwoBundle build_12tsp_lower(int k, int g, const SimpleGraph& base4reg);

// The 2-regular substituted graph: unit edges of the bundle minus the in-copy links.
SimpleGraph substituted_graph(const OneTwoBundle& bundle);

// Vertex cycles of a 2-regular graph, each starting at its smallest vertex and continuing
// towards the smaller neighbour; cycles ordered by first vertex.
std::vector<std::vector<int>> cycle_decomposition(const SimpleGraph& two_regular);

// Directory with instance.txt, engineered.tour, witness.tour and params.txt (key=value).
template <class I>
void write_bundle(const std::string& directory, const ConstructionBundle<I>& bundle);
GraphBundle read_graph_bundle(const std::string& directory);
OneTwoBundle read_one_two_bundle(const std::string& directory);

template <class I>
std::string format_params(const ConstructionBundle<I>& bundle);

}  // namespace kopt
