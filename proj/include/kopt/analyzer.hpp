#pragma once

// Length classes of tour edges measured against a reference tour, the contracted graphs G1 and
// G2 built from them, and the extraction of an improving move from a short cycle of G2.
//
// With r = (4k-5)/(4k-4) and L the reference tour length, a tour edge e is l-long when
// r^(l+1) < c(e)/L <= r^l. The reference tour is laid out on a circle of circumference L and cut
// into M = 4(k-1)·ceil(r^-l) equal half-open arcs; vertices on the same arc are near.
// All comparisons are exact integer cross-multiplications.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kopt/graph.hpp"
#include "kopt/instance.hpp"
#include "kopt/moves.hpp"
#include "kopt/tour.hpp"

namespace kopt {

// Tour edge i runs from tour[i] to tour[i+1] in the tour's orientation.
struct LengthClassReport {
  int k = 0;
  Cost reference_length = 0;
  std::map<int, std::vector<int>> classes;  // l -> tour edge indices

  int q(int l) const;
  int classified() const;
};

// Throws InvalidInput if c <= 0, L <= 0 or k < 2.
bool is_l_long(Cost c, Cost reference_length, int k, int l);
int length_class(Cost c, Cost reference_length, int k);

// Throws InvalidInput if k < 2 or the tours do not match the instance; throws InvariantViolation
// if some tour edge is longer than half the reference length.
template <TspInstance I>
LengthClassReport length_class_report(const I& instance, const Tour& tour, const Tour& reference,
                                      int k);

// M = 4(k-1)·ceil(((4k-4)/(4k-5))^l). Throws InvalidInput if it does not fit in 64 bits.
std::int64_t arc_count(int k, int l);

class ContractionMap {
 public:
  template <TspInstance I>
  ContractionMap(const I& instance, const Tour& reference, int k, int l);

  std::int64_t arc_count() const { return arcs_; }
  Cost circumference() const { return length_; }
  Cost position(int v) const { return position_[v]; }
  std::int64_t arc(int v) const { return arc_[v]; }
  bool near(int u, int v) const { return arc_[u] == arc_[v]; }
  const std::vector<std::int64_t>& arcs_by_vertex() const { return arc_; }

 private:
  std::int64_t arcs_ = 0;
  Cost length_ = 0;
  std::vector<Cost> position_;
  std::vector<std::int64_t> arc_;
};

struct G2Certificate {
  int k = 0;
  int l = 0;
  Cost reference_length = 0;
  std::int64_t arc_count = 0;
  std::vector<std::int64_t> arc_of_vertex;
  std::vector<std::int64_t> g1_vertices;  // occupied arcs, increasing; G1 vertex i is arc g1_vertices[i]
  std::vector<int> g1_vertex_of;          // instance vertex -> G1 vertex
  MultiDigraph g1;                        // arc labels are tour edge indices
  std::vector<char> red;                  // per G1 vertex
  int q_l = 0;
  std::vector<int> retained;              // tour edge indices of G2, increasing
  std::optional<int> girth;               // of the underlying undirected multigraph of G2
  std::vector<int> cycle;                 // C-edges in cycle order when girth < 2k

  bool has_violating_cycle() const { return !cycle.empty(); }
  int h() const { return static_cast<int>(cycle.size()) / 2; }
};

// Colours G1 vertices by conditional expectations in increasing arc order, keeps the l-long
// edges running red -> blue and reports a shortest cycle (two parallel edges form a 2-cycle).
template <TspInstance I>
G2Certificate build_g2(const I& instance, const Tour& tour, const Tour& reference, int k, int l);

// True iff 2·total·(4k-4)^l <= L·(4k-5)^l.
bool short_edges_within_budget(Cost total, Cost reference_length, int k, int l);

struct ExtractedMove {
  KMove move;
  int h = 0;
  int components = 0;  // cycles formed by connecting paths and short edges
  std::vector<int> paths_per_component;
  std::vector<Edge> short_edges;
  int fixed_c_edges = 0;
  int ambivalent_moves = 0;
};

// Builds the cheaper tour from the violating cycle of the certificate: connecting paths plus
// short edges, fixed C-edges doubled and shortcut at their endpoints, then ambivalent 2-moves
// until h-1 C-edges remain. The returned move replaces at most h+1 tour edges.
// Throws InvalidInput on a malformed certificate and InvariantViolation if a structural
// property used by the construction fails (the message names the property).
template <TspInstance I>
ExtractedMove extract_improving_move(const I& instance, const Tour& tour,
                                     const G2Certificate& certificate);

std::string format_length_classes(const LengthClassReport& report);
std::string format_g2_certificate(const G2Certificate& certificate);

}  // namespace kopt
