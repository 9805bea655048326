#include "kopt/analyzer.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>
#include <boost/multiprecision/cpp_int.hpp>

#include "kopt/error.hpp"

namespace kopt {

using boost::multiprecision::cpp_int;

int LengthClassReport::q(int l) const {
  const auto it = classes.find(l);
  return it == classes.end() ? 0 : static_cast<int>(it->second.size());
}

int LengthClassReport::classified() const {
  int total = 0;
  for (const auto& [l, edges] : classes) total += static_cast<int>(edges.size());
  return total;
}

namespace {

void require_k(int k) {
  if (k < 2) throw InvalidInput("length classes need k >= 2");
}

template <TspInstance I>
void require_tours(const I& instance, const Tour& tour, const Tour& reference) {
  if (tour.size() != instance.size()) throw_dimension_mismatch(instance.size(), tour.size());
  if (reference.size() != instance.size()) {
    throw_dimension_mismatch(instance.size(), reference.size());
  }
}

}  // namespace

bool is_l_long(Cost c, Cost reference_length, int k, int l) {
  require_k(k);
  if (c <= 0 || reference_length <= 0 || l < 0) throw InvalidInput("is_l_long needs positive values");
  const cpp_int a = boost::multiprecision::pow(cpp_int(4 * k - 5), static_cast<unsigned>(l));
  const cpp_int b = boost::multiprecision::pow(cpp_int(4 * k - 4), static_cast<unsigned>(l));
  const cpp_int L(reference_length);
  const cpp_int cc(c);
  return L * a * (4 * k - 5) < cc * b * (4 * k - 4) && cc * b <= L * a;
}

int length_class(Cost c, Cost reference_length, int k) {
  require_k(k);
  if (c <= 0 || reference_length <= 0) throw InvalidInput("length_class needs positive values");
  if (c > reference_length) throw InvalidInput("edge longer than the reference length");
  cpp_int a = 1;  // (4k-5)^l
  cpp_int b = 1;  // (4k-4)^l
  const cpp_int L(reference_length);
  const cpp_int cc(c);
  int l = 0;
  while (!(L * a * (4 * k - 5) < cc * b * (4 * k - 4))) {
    a *= 4 * k - 5;
    b *= 4 * k - 4;
    ++l;
  }
  return l;
}

template <TspInstance I>
LengthClassReport length_class_report(const I& instance, const Tour& tour, const Tour& reference,
                                      int k) {
  require_k(k);
  require_tours(instance, tour, reference);
  LengthClassReport report;
  report.k = k;
  report.reference_length = tour_cost(instance, reference);
  const int n = tour.size();
  for (int i = 0; i < n; ++i) {
    const Cost c = instance.cost(tour[i], tour[(i + 1) % n]);
    if (c <= 0) continue;
    if (2 * c > report.reference_length) {
      throw InvariantViolation("tour edge " + std::to_string(i) + " is longer than half the " +
                               "reference length; the instance is not metric");
    }
    report.classes[length_class(c, report.reference_length, k)].push_back(i);
  }
  return report;
}

std::int64_t arc_count(int k, int l) {
  require_k(k);
  if (l < 0) throw InvalidInput("length class index must be non-negative");
  const cpp_int num = boost::multiprecision::pow(cpp_int(4 * k - 4), static_cast<unsigned>(l));
  const cpp_int den = boost::multiprecision::pow(cpp_int(4 * k - 5), static_cast<unsigned>(l));
  const cpp_int m = cpp_int(4 * (k - 1)) * ((num + den - 1) / den);
  if (m > cpp_int(std::numeric_limits<std::int64_t>::max())) {
    throw InvalidInput("arc count does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(m);
}

template <TspInstance I>
ContractionMap::ContractionMap(const I& instance, const Tour& reference, int k, int l)
    : arcs_(kopt::arc_count(k, l)) {
  if (reference.size() != instance.size()) {
    throw_dimension_mismatch(instance.size(), reference.size());
  }
  const int n = reference.size();
  position_.assign(n, 0);
  arc_.assign(n, 0);
  Cost at = 0;
  for (int i = 0; i < n; ++i) {
    position_[reference[i]] = at;
    at += instance.cost(reference[i], reference[(i + 1) % n]);
  }
  length_ = at;
  if (length_ <= 0) return;
  for (int v = 0; v < n; ++v) {
    const cpp_int arc = cpp_int(position_[v]) * arcs_ / length_;
    arc_[v] = static_cast<std::int64_t>(arc);
  }
}

template <TspInstance I>
G2Certificate build_g2(const I& instance, const Tour& tour, const Tour& reference, int k, int l) {
  require_k(k);
  require_tours(instance, tour, reference);
  const ContractionMap map(instance, reference, k, l);
  const int n = tour.size();
  G2Certificate cert;
  cert.k = k;
  cert.l = l;
  cert.reference_length = map.circumference();
  cert.arc_count = map.arc_count();
  cert.arc_of_vertex = map.arcs_by_vertex();
  cert.g1_vertices = cert.arc_of_vertex;
  std::sort(cert.g1_vertices.begin(), cert.g1_vertices.end());
  cert.g1_vertices.erase(std::unique(cert.g1_vertices.begin(), cert.g1_vertices.end()),
                         cert.g1_vertices.end());
  cert.g1_vertex_of.resize(n);
  for (int v = 0; v < n; ++v) {
    cert.g1_vertex_of[v] = static_cast<int>(
        std::lower_bound(cert.g1_vertices.begin(), cert.g1_vertices.end(), cert.arc_of_vertex[v]) -
        cert.g1_vertices.begin());
  }
  const int g1n = static_cast<int>(cert.g1_vertices.size());
  cert.g1 = MultiDigraph(g1n);

  // G1 keeps every tour edge between distinct arcs; the l-long ones are marked.
  std::vector<int> long_arcs;  // arc ids in g1
  for (int i = 0; i < n; ++i) {
    const int a = tour[i];
    const int b = tour[(i + 1) % n];
    const Cost c = instance.cost(a, b);
    const bool long_edge = c > 0 && cert.reference_length > 0 && is_l_long(c, cert.reference_length, k, l);
    cert.q_l += long_edge;
    if (cert.g1_vertex_of[a] == cert.g1_vertex_of[b]) {
      if (long_edge) {
        throw InvariantViolation("an l-long edge joins two near vertices; the instance is not metric");
      }
      continue;
    }
    const int id = cert.g1.add_arc(cert.g1_vertex_of[a], cert.g1_vertex_of[b], i);
    if (long_edge) long_arcs.push_back(id);
  }

  // Conditional expectations: unassigned vertices count as red or blue with probability 1/2.
  // Weights are scaled by 4 so they stay integral.
  std::vector<std::vector<int>> incident(g1n);
  for (int id : long_arcs) {
    incident[cert.g1.arc(id).tail].push_back(id);
    incident[cert.g1.arc(id).head].push_back(id);
  }
  enum : signed char { kUnset = -1, kBlue = 0, kRed = 1 };
  std::vector<signed char> colour(g1n, kUnset);
  auto weight = [&](int id) {
    const Arc& arc = cert.g1.arc(id);
    const int t = colour[arc.tail] == kUnset ? 1 : (colour[arc.tail] == kRed ? 2 : 0);
    const int h = colour[arc.head] == kUnset ? 1 : (colour[arc.head] == kBlue ? 2 : 0);
    return t * h;
  };
  for (int v = 0; v < g1n; ++v) {
    colour[v] = kRed;
    int as_red = 0;
    for (int id : incident[v]) as_red += weight(id);
    colour[v] = kBlue;
    int as_blue = 0;
    for (int id : incident[v]) as_blue += weight(id);
    colour[v] = as_red >= as_blue ? kRed : kBlue;
  }
  cert.red.resize(g1n);
  for (int v = 0; v < g1n; ++v) cert.red[v] = colour[v] == kRed;

  std::vector<Arc> kept;
  for (int id : long_arcs) {
    const Arc& arc = cert.g1.arc(id);
    if (cert.red[arc.tail] && !cert.red[arc.head]) kept.push_back(arc);
  }
  std::sort(kept.begin(), kept.end(), [](const Arc& a, const Arc& b) { return a.label < b.label; });
  for (const Arc& a : kept) cert.retained.push_back(a.label);
  if (static_cast<int>(cert.retained.size()) * 4 < cert.q_l) {
    throw InvariantViolation("colouring retained fewer than a quarter of the l-long edges");
  }

  // Parallel edges give girth 2.
  std::vector<Arc> by_ends = kept;
  std::sort(by_ends.begin(), by_ends.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.tail, a.head, a.label) < std::tie(b.tail, b.head, b.label);
  });
  for (std::size_t i = 1; i < by_ends.size(); ++i) {
    if (by_ends[i].tail == by_ends[i - 1].tail && by_ends[i].head == by_ends[i - 1].head) {
      cert.girth = 2;
      if (2 < 2 * k) cert.cycle = {by_ends[i - 1].label, by_ends[i].label};
      return cert;
    }
  }

  // Simple graph: shortest cycle through each edge by BFS with that edge removed.
  struct Step {
    int to;
    int label;
  };
  std::vector<std::vector<Step>> adj(g1n);
  for (const Arc& a : kept) {
    adj[a.tail].push_back({a.head, a.label});
    adj[a.head].push_back({a.tail, a.label});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const Step& a, const Step& b) {
      return a.to != b.to ? a.to < b.to : a.label < b.label;
    });
  }
  std::vector<int> dist(g1n);
  std::vector<Step> parent(g1n);
  std::vector<int> queue;
  for (const Arc& e : kept) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[e.tail] = 0;
    queue.assign(1, e.tail);
    for (std::size_t q = 0; q < queue.size() && dist[e.head] < 0; ++q) {
      const int x = queue[q];
      if (cert.girth && dist[x] + 2 >= *cert.girth) break;
      for (const Step& s : adj[x]) {
        if (s.label == e.label || dist[s.to] >= 0) continue;
        dist[s.to] = dist[x] + 1;
        parent[s.to] = {x, s.label};
        queue.push_back(s.to);
      }
    }
    if (dist[e.head] < 0) continue;
    const int length = dist[e.head] + 1;
    if (cert.girth && length >= *cert.girth) continue;
    cert.girth = length;
    cert.cycle.clear();
    if (length < 2 * k) {
      cert.cycle.push_back(e.label);
      for (int y = e.head; y != e.tail; y = parent[y].to) cert.cycle.push_back(parent[y].label);
    }
  }
  return cert;
}

bool short_edges_within_budget(Cost total, Cost reference_length, int k, int l) {
  require_k(k);
  const cpp_int a = boost::multiprecision::pow(cpp_int(4 * k - 5), static_cast<unsigned>(l));
  const cpp_int b = boost::multiprecision::pow(cpp_int(4 * k - 4), static_cast<unsigned>(l));
  return 2 * cpp_int(total) * b <= cpp_int(reference_length) * a;
}

std::string format_length_classes(const LengthClassReport& report) {
  std::ostringstream out;
  out << "k " << report.k << "\n";
  out << "reference_length " << report.reference_length << "\n";
  out << "classified " << report.classified() << "\n";
  for (const auto& [l, edges] : report.classes) {
    out << "class " << l << " q " << edges.size() << " edges";
    for (int e : edges) out << ' ' << e;
    out << "\n";
  }
  return out.str();
}

std::string format_g2_certificate(const G2Certificate& cert) {
  std::ostringstream out;
  out << "k " << cert.k << "\n";
  out << "l " << cert.l << "\n";
  out << "reference_length " << cert.reference_length << "\n";
  out << "arc_count " << cert.arc_count << "\n";
  out << "q_l " << cert.q_l << "\n";
  out << "g1_vertices " << cert.g1_vertices.size() << " g1_arcs " << cert.g1.num_arcs() << "\n";
  out << "colouring";
  for (std::size_t v = 0; v < cert.g1_vertices.size(); ++v) {
    out << ' ' << cert.g1_vertices[v] << (cert.red[v] ? ":R" : ":B");
  }
  out << "\n";
  out << "retained " << cert.retained.size();
  for (int e : cert.retained) out << ' ' << e;
  out << "\n";
  out << "girth " << (cert.girth ? std::to_string(*cert.girth) : std::string("none")) << "\n";
  out << "violating_cycle";
  if (cert.cycle.empty()) out << " none";
  for (int e : cert.cycle) out << ' ' << e;
  out << "\n";
  return out.str();
}

#define KOPT_INSTANTIATE(I)                                                                    \
  template LengthClassReport length_class_report<I>(const I&, const Tour&, const Tour&, int); \
  template ContractionMap::ContractionMap(const I&, const Tour&, int, int);                   \
  template G2Certificate build_g2<I>(const I&, const Tour&, const Tour&, int, int);

KOPT_INSTANTIATE(MetricInstance)
KOPT_INSTANTIATE(GraphInstance)
KOPT_INSTANTIATE(OneTwoInstance)

}  // namespace kopt
