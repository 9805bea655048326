#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <boost/pending/disjoint_sets.hpp>

#include "kopt/certify.hpp"
#include "kopt/error.hpp"

namespace kopt {

std::string status_name(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::Certified: return "certified";
    case CertificateStatus::Improvable: return "improvable";
    case CertificateStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

using Pairing = std::vector<std::array<int, 2>>;

// All perfect matchings of slots 0..2r-1.
std::vector<Pairing> perfect_matchings(int r) {
  std::vector<Pairing> out;
  Pairing cur;
  std::vector<char> used(2 * r, 0);
  std::function<void()> rec = [&] {
    int first = 0;
    while (first < 2 * r && used[first]) ++first;
    if (first == 2 * r) {
      out.push_back(cur);
      return;
    }
    used[first] = 1;
    for (int s = first + 1; s < 2 * r; ++s) {
      if (used[s]) continue;
      used[s] = 1;
      cur.push_back({first, s});
      rec();
      cur.pop_back();
      used[s] = 0;
    }
    used[first] = 0;
  };
  rec();
  return out;
}

bool single_component(int count, const std::vector<std::array<int, 2>>& links) {
  boost::disjoint_sets_with_storage<> sets(count);
  for (const auto& [a, b] : links) sets.union_set(a, b);
  const int root = sets.find_set(0);
  for (int i = 1; i < count; ++i) {
    if (sets.find_set(i) != root) return false;
  }
  return true;
}

}  // namespace

template <TspInstance I>
KOptCertificate verify_k_optimal(const I& instance, const Tour& tour, int k,
                                 std::uint64_t budget) {
  if (k < 2) throw InvalidInput("k-optimality needs k >= 2");
  const int n = tour.size();
  if (n != instance.size()) throw_dimension_mismatch(instance.size(), n);
  KOptCertificate cert;
  cert.k = k;
  std::vector<Cost> edge_cost(n);
  for (int p = 0; p < n; ++p) edge_cost[p] = instance.cost(tour[p], tour[(p + 1) % n]);

  for (int r = 2; r <= std::min(k, n); ++r) {
    const std::vector<Pairing> matchings = perfect_matchings(r);
    std::vector<int> pos(r);
    for (int j = 0; j < r; ++j) pos[j] = j;
    std::vector<int> slot_vertex(2 * r);
    std::vector<int> slot_segment(2 * r);
    std::vector<std::array<int, 2>> links(r);
    std::vector<Edge> added(r);
    while (true) {
      Cost removed = 0;
      for (int j = 0; j < r; ++j) {
        removed += edge_cost[pos[j]];
        slot_vertex[2 * j] = tour[pos[j]];
        slot_vertex[2 * j + 1] = tour[(pos[j] + 1) % n];
        // Segment j runs from the head of removed edge j to the tail of removed edge j+1.
        slot_segment[2 * j + 1] = j;
        slot_segment[2 * j] = (j - 1 + r) % r;
      }
      for (const Pairing& m : matchings) {
        if (cert.searched == budget) {
          cert.status = CertificateStatus::BudgetExceeded;
          return cert;
        }
        ++cert.searched;
        Cost delta = -removed;
        for (const auto& [a, b] : m) delta += instance.cost(slot_vertex[a], slot_vertex[b]);
        if (delta >= 0) continue;
        bool valid = true;
        for (int e = 0; e < r && valid; ++e) {
          const int a = slot_vertex[m[e][0]];
          const int b = slot_vertex[m[e][1]];
          valid = a != b && !tour.has_edge(a, b);
          added[e] = make_edge(a, b);
          links[e] = {slot_segment[m[e][0]], slot_segment[m[e][1]]};
        }
        if (!valid) continue;
        std::vector<Edge> sorted = added;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        if (!single_component(r, links)) continue;
        KMove move;
        for (int j = 0; j < r; ++j) move.removed.push_back(tour.edge(pos[j]));
        move.added = added;
        move.delta = delta;
        cert.status = CertificateStatus::Improvable;
        cert.counterexample = std::move(move);
        return cert;
      }
      int j = r - 1;
      while (j >= 0 && pos[j] == n - r + j) --j;
      if (j < 0) break;
      ++pos[j];
      for (int t = j + 1; t < r; ++t) pos[t] = pos[t - 1] + 1;
    }
  }
  return cert;
}

template <TspInstance I>
AlternatingCycleResult find_improving_alternating_cycle(const I& instance, const Tour& tour,
                                                        int max_edges, std::uint64_t budget) {
  const int n = tour.size();
  if (n != instance.size()) throw_dimension_mismatch(instance.size(), n);
  AlternatingCycleResult result;
  std::vector<int> walk;
  std::vector<char> on(n, 0);
  bool stop = false;

  // T △ C is a tour iff the segments left by the removed tour edges join into one cycle; every
  // vertex of C keeps degree two because it loses one tour edge and gains one non-tour edge.
  auto closes_to_tour = [&]() {
    const int m = static_cast<int>(walk.size());  // closed walk has m edges
    std::vector<int> cut;
    for (int j = 0; j < m; j += 2) {
      const int a = walk[j];
      const int b = walk[j + 1];
      cut.push_back(tour.next(a) == b ? tour.position(a) : tour.position(b));
    }
    std::sort(cut.begin(), cut.end());
    const int r = static_cast<int>(cut.size());
    auto segment = [&](int v) {
      const int q = tour.position(v);
      const int before = static_cast<int>(std::lower_bound(cut.begin(), cut.end(), q) - cut.begin());
      return (before - 1 + r) % r;
    };
    std::vector<std::array<int, 2>> links;
    for (int j = 1; j < m; j += 2) {
      links.push_back({segment(walk[j]), segment(walk[(j + 1) % m])});
    }
    return single_component(r, links);
  };

  std::function<void(Cost)> dfs = [&](Cost gain) {
    if (stop) return;
    if (result.searched == budget) {
      result.status = CertificateStatus::BudgetExceeded;
      stop = true;
      return;
    }
    ++result.searched;
    const int edges = static_cast<int>(walk.size()) - 1;
    const int cur = walk.back();
    const int start = walk.front();
    if (edges % 2 == 1 && edges + 1 >= 4 && edges + 1 <= max_edges && !tour.has_edge(cur, start)) {
      const Cost closed = gain - instance.cost(cur, start);
      if (closed > 0 && closes_to_tour()) {
        result.status = CertificateStatus::Improvable;
        result.gain = closed;
        result.cycle = walk;
        result.cycle->push_back(start);
        stop = true;
        return;
      }
    }
    if (edges + 2 > max_edges) return;
    auto step = [&](int v, Cost g) {
      if (v <= start || on[v]) return;
      walk.push_back(v);
      on[v] = 1;
      dfs(g);
      on[v] = 0;
      walk.pop_back();
    };
    if (edges % 2 == 0) {
      for (int v : {tour.prev(cur), tour.next(cur)}) {
        if (!stop) step(v, gain + instance.cost(cur, v));
      }
    } else {
      for (int v = 0; v < n && !stop; ++v) {
        if (v != cur && !tour.has_edge(cur, v)) step(v, gain - instance.cost(cur, v));
      }
    }
  };

  if (max_edges >= 4 && n >= 4) {
    for (int s = 0; s < n && !stop; ++s) {
      walk = {s};
      on[s] = 1;
      dfs(0);
      on[s] = 0;
    }
  }
  return result;
}

ImprovCertificate verify_k_improv_optimal(const OneTwoInstance& instance, const TwoMatching& tm,
                                          int k, std::uint64_t budget) {
  if (k < 1 || k > kMaxImprovK) {
    throw InvalidInput("k-improv certification supports 1 <= k <= " + std::to_string(kMaxImprovK));
  }
  const int n = instance.size();
  if (tm.size() != n) throw InvalidInput("2-matching and instance sizes differ");
  ImprovCertificate cert;
  cert.k = k;

  const std::vector<int> label = tm.component_labels();
  const int count = tm.components();
  std::vector<std::vector<int>> members(count);
  for (int v = 0; v < n; ++v) members[label[v]].push_back(v);
  std::vector<std::set<int>> adjacent(count);
  for (const Edge& e : instance.unit_graph().edges()) {
    if (label[e.u] != label[e.v]) {
      adjacent[label[e.u]].insert(label[e.v]);
      adjacent[label[e.v]].insert(label[e.u]);
    }
  }

  struct Counts {
    int components = 0;
    int cycles = 0;
    int singletons = 0;
  };
  std::vector<int> local(n, -1);
  std::vector<int> group_index(count, -1);
  // Counts of the subgraph induced on `verts` by `edges`.
  auto count_on = [&](const std::vector<int>& verts, const std::vector<Edge>& edges) {
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    boost::disjoint_sets_with_storage<> sets(verts.size());
    std::vector<int> degree(verts.size(), 0);
    for (const Edge& e : edges) {
      sets.union_set(local[e.u], local[e.v]);
      ++degree[local[e.u]];
      ++degree[local[e.v]];
    }
    std::vector<int> size(verts.size(), 0);
    std::vector<char> all_two(verts.size(), 1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const int root = static_cast<int>(sets.find_set(static_cast<int>(i)));
      ++size[root];
      if (degree[i] != 2) all_two[root] = 0;
    }
    Counts c;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (size[i] == 0) continue;
      ++c.components;
      if (size[i] == 1) ++c.singletons;
      if (size[i] >= 3 && all_two[i]) ++c.cycles;
    }
    for (int v : verts) local[v] = -1;
    return c;
  };
  auto better = [](const Counts& a, const Counts& b) {
    if (a.components != b.components) return a.components < b.components;
    if (a.cycles != b.cycles) return a.cycles > b.cycles;
    return a.singletons < b.singletons;
  };

  // Returns true when the search must stop (counterexample or budget).
  auto check_group = [&](const std::vector<int>& group) -> bool {
    std::vector<int> verts;
    for (int c : group) verts.insert(verts.end(), members[c].begin(), members[c].end());
    std::sort(verts.begin(), verts.end());
    std::vector<char> inside(n, 0);
    for (int v : verts) inside[v] = 1;
    std::vector<Edge> current;
    std::vector<Edge> candidates;  // current edges first, then unit non-matching edges
    for (int v : verts) {
      for (int w : tm.neighbor_slots(v)) {
        if (w > v) current.push_back({v, w});
      }
    }
    std::sort(current.begin(), current.end());
    candidates = current;
    const int removable = static_cast<int>(current.size());
    for (int v : verts) {
      for (int w : instance.unit_neighbors(v)) {
        if (w > v && inside[w] && !tm.has_edge(v, w)) candidates.push_back({v, w});
      }
    }
    const Counts before = count_on(verts, current);
    const int m = static_cast<int>(candidates.size());
    // A change set is evaluated only in the group of exactly the components it touches.
    for (std::size_t i = 0; i < group.size(); ++i) group_index[group[i]] = static_cast<int>(i);
    std::vector<std::array<int, 2>> touches(m);
    for (int i = 0; i < m; ++i) {
      touches[i] = {group_index[label[candidates[i].u]], group_index[label[candidates[i].v]]};
    }
    std::vector<int> touch_count(group.size(), 0);
    int untouched = static_cast<int>(group.size());
    auto touch = [&](int i, int step) {
      const auto [a, b] = touches[i];
      const std::array<int, 2> distinct = {a, a == b ? -1 : b};
      for (int t : distinct) {
        if (t < 0) continue;
        if (step > 0 && touch_count[t]++ == 0) --untouched;
        if (step < 0 && --touch_count[t] == 0) ++untouched;
      }
    };
    std::vector<int> chosen;
    std::function<bool(int)> rec = [&](int from) -> bool {
      if (!chosen.empty() && untouched == 0) {
        if (cert.searched == budget) {
          cert.status = CertificateStatus::BudgetExceeded;
          return true;
        }
        ++cert.searched;
        std::vector<char> drop(removable, 0);
        std::vector<Edge> edges;
        ImprovMove move;
        for (int i : chosen) {
          if (i < removable) {
            drop[i] = 1;
            move.removed.push_back(candidates[i]);
          } else {
            move.added.push_back(candidates[i]);
          }
        }
        for (int i = 0; i < removable; ++i) {
          if (!drop[i]) edges.push_back(candidates[i]);
        }
        edges.insert(edges.end(), move.added.begin(), move.added.end());
        bool ok = true;
        for (const Edge& e : move.added) {
          for (int v : {e.u, e.v}) {
            int d = 0;
            for (const Edge& f : edges) d += (f.u == v) + (f.v == v);
            ok = ok && d <= 2;
          }
        }
        if (ok && better(count_on(verts, edges), before)) {
          cert.status = CertificateStatus::Improvable;
          cert.counterexample = std::move(move);
          return true;
        }
      }
      const int slots = k - static_cast<int>(chosen.size());
      if (slots == 0 || 2 * slots < untouched) return false;
      for (int i = from; i < m; ++i) {
        chosen.push_back(i);
        touch(i, +1);
        const bool stop = rec(i + 1);
        touch(i, -1);
        chosen.pop_back();
        if (stop) return true;
      }
      return false;
    };
    const bool stop = rec(0);
    for (int c : group) group_index[c] = -1;
    return stop;
  };

  const int max_group = std::min(k + 1, count);
  for (int root = 0; root < count; ++root) {
    std::set<std::vector<int>> seen;
    std::vector<int> group{root};
    seen.insert(group);
    std::function<bool()> grow = [&]() -> bool {
      if (check_group(group)) return true;
      if (static_cast<int>(group.size()) == max_group) return false;
      std::set<int> frontier;
      for (int c : group) {
        for (int d : adjacent[c]) {
          if (d > root && !std::binary_search(group.begin(), group.end(), d)) frontier.insert(d);
        }
      }
      for (int d : frontier) {
        std::vector<int> next = group;
        next.insert(std::upper_bound(next.begin(), next.end(), d), d);
        if (!seen.insert(next).second) continue;
        std::swap(group, next);
        const bool stop = grow();
        std::swap(group, next);
        if (stop) return true;
      }
      return false;
    };
    if (grow()) return cert;
  }
  return cert;
}

#define KOPT_INSTANTIATE(I)                                                                   \
  template KOptCertificate verify_k_optimal<I>(const I&, const Tour&, int, std::uint64_t); \
  template AlternatingCycleResult find_improving_alternating_cycle<I>(const I&, const Tour&, \
                                                                      int, std::uint64_t);

KOPT_INSTANTIATE(MetricInstance)
KOPT_INSTANTIATE(GraphInstance)
KOPT_INSTANTIATE(OneTwoInstance)

}  // namespace kopt
