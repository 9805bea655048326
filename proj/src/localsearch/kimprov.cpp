#include "kopt/kimprov.hpp"

#include <algorithm>
#include <set>

#include "kopt/error.hpp"
#include "kopt/random_instances.hpp"

namespace kopt {

TwoMatching::TwoMatching(int n) : adj_(n, {-1, -1}) { recount(); }

TwoMatching::TwoMatching(const OneTwoInstance& instance, const std::vector<Edge>& edges)
    : adj_(instance.size(), {-1, -1}) {
  const int n = instance.size();
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw InvalidInput("2-matching edge out of range");
    }
    if (!instance.is_unit(e.u, e.v)) throw InvalidInput("2-matching edge is not a unit edge");
    if (has_edge(e.u, e.v)) throw InvalidInput("2-matching edge listed twice");
    for (int w : {e.u, e.v}) {
      if (degree(w) == 2) throw InvalidInput("2-matching vertex of degree above two");
    }
    adj_[e.u][adj_[e.u][0] < 0 ? 0 : 1] = e.v;
    adj_[e.v][adj_[e.v][0] < 0 ? 0 : 1] = e.u;
    ++num_edges_;
  }
  recount();
}

std::vector<Edge> TwoMatching::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int v = 0; v < size(); ++v) {
    for (int w : adj_[v]) {
      if (w > v) out.push_back({v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TwoMatching::component_labels() const {
  const int n = size();
  std::vector<int> label(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (w >= 0 && label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

void TwoMatching::recount() {
  const std::vector<int> label = component_labels();
  const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> size(count, 0);
  std::vector<int> degree_sum(count, 0);
  for (int v = 0; v < static_cast<int>(label.size()); ++v) {
    ++size[label[v]];
    degree_sum[label[v]] += degree(v);
  }
  key_ = {count, 0, 0};
  for (int c = 0; c < count; ++c) {
    if (size[c] == 1) ++key_.singletons;
    if (size[c] >= 3 && degree_sum[c] == 2 * size[c]) ++key_.cycles;
  }
}

TwoMatching tour_to_two_matching(const OneTwoInstance& instance, const Tour& tour) {
  if (tour.size() != instance.size()) throw_dimension_mismatch(instance.size(), tour.size());
  std::vector<Edge> unit;
  for (const Edge& e : tour.edges()) {
    if (instance.is_unit(e.u, e.v)) unit.push_back(e);
  }
  return TwoMatching(instance, unit);
}

Tour two_matching_to_tour(const OneTwoInstance& instance, const TwoMatching& tm,
                          std::uint64_t seed) {
  const int n = instance.size();
  if (tm.size() != n) throw InvalidInput("2-matching and instance sizes differ");
  Rng rng(seed);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> pieces;

  auto walk = [&](int start) {
    std::vector<int> seq{start};
    seen[start] = 1;
    int prev = -1;
    int cur = start;
    while (true) {
      int step = -1;
      for (int w : tm.neighbor_slots(cur)) {
        if (w >= 0 && w != prev && !seen[w]) {
          step = w;
          break;
        }
      }
      if (step < 0) break;
      seen[step] = 1;
      seq.push_back(step);
      prev = cur;
      cur = step;
    }
    return seq;
  };

  for (int v = 0; v < n; ++v) {
    if (!seen[v] && tm.degree(v) < 2) pieces.push_back(walk(v));
  }
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> cycle = walk(v);
    const std::size_t cut = rng() % cycle.size();
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(cut), cycle.end());
    pieces.push_back(std::move(cycle));
  }
  for (std::size_t i = pieces.size(); i > 1; --i) {
    std::swap(pieces[i - 1], pieces[rng() % i]);
  }
  std::vector<int> order;
  order.reserve(n);
  for (auto& piece : pieces) {
    if (rng() & 1U) std::reverse(piece.begin(), piece.end());
    order.insert(order.end(), piece.begin(), piece.end());
  }
  return Tour(std::move(order));
}

TwoMatching apply_improv_move(const OneTwoInstance& instance, const TwoMatching& tm,
                              const ImprovMove& move) {
  std::vector<Edge> removed;
  for (const Edge& e : move.removed) {
    if (e.u < 0 || e.v < 0 || e.u >= tm.size() || e.v >= tm.size() || !tm.has_edge(e.u, e.v)) {
      throw InvalidInput("removed edge is not in the 2-matching");
    }
    removed.push_back(make_edge(e.u, e.v));
  }
  std::sort(removed.begin(), removed.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
    throw InvalidInput("edge removed twice");
  }
  std::vector<Edge> edges;
  for (const Edge& e : tm.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) edges.push_back(e);
  }
  for (const Edge& e : move.added) edges.push_back(make_edge(e.u, e.v));
  return TwoMatching(instance, edges);
}

namespace {

struct Change {
  Edge edge;
  bool add;
};

class ImprovSearch {
 public:
  ImprovSearch(const OneTwoInstance& instance, const TwoMatching& tm, int k)
      : inst_(instance), tm_(tm), n_(instance.size()), k_(k), label_(tm.component_labels()),
        stamp_(n_, 0), degree_(n_, 0) {
    const int count = tm.components();
    members_.resize(count);
    for (int v = 0; v < n_; ++v) members_[label_[v]].push_back(v);
    is_cycle_.assign(count, 0);
    for (int c = 0; c < count; ++c) {
      const auto& m = members_[c];
      is_cycle_[c] = m.size() >= 3 && std::all_of(m.begin(), m.end(), [&](int v) {
                       return tm.degree(v) == 2;
                     });
    }
  }

  std::optional<ImprovMove> run() {
    std::vector<Change> roots;
    for (const Edge& e : inst_.unit_graph().edges()) roots.push_back({e, !tm_.has_edge(e.u, e.v)});
    std::sort(roots.begin(), roots.end(),
              [&](const Change& a, const Change& b) { return key(a) < key(b); });
    for (const Change& root : roots) {
      root_key_ = key(root);
      seen_.clear();
      seen_.insert({root_key_});
      set_ = {root};
      touched_.clear();
      touch(root);
      if (auto move = explore()) return move;
    }
    return std::nullopt;
  }

 private:
  std::uint64_t key(const Change& c) const {
    return (static_cast<std::uint64_t>(c.edge.u) * static_cast<std::uint64_t>(n_) +
            static_cast<std::uint64_t>(c.edge.v)) * 2 + (c.add ? 1 : 0);
  }

  void touch(const Change& c) {
    for (int v : {c.edge.u, c.edge.v}) {
      const int comp = label_[v];
      if (std::find(touched_.begin(), touched_.end(), comp) == touched_.end()) {
        touched_.push_back(comp);
      }
    }
  }

  // Degree after applying set_ at every endpoint of set_; returns the total excess over two.
  int excess_degree() {
    ++epoch_;
    int excess = 0;
    for (const Change& c : set_) {
      for (int v : {c.edge.u, c.edge.v}) {
        if (stamp_[v] != epoch_) {
          stamp_[v] = epoch_;
          degree_[v] = tm_.degree(v);
        }
        degree_[v] += c.add ? 1 : -1;
      }
    }
    ++epoch_;
    for (const Change& c : set_) {
      for (int v : {c.edge.u, c.edge.v}) {
        if (stamp_[v] == epoch_) continue;
        stamp_[v] = epoch_;
        excess += std::max(0, degree_[v] - 2);
      }
    }
    return excess;
  }

  bool is_removed(int a, int b) const {
    const Edge e = make_edge(a, b);
    for (const Change& c : set_) {
      if (!c.add && c.edge == e) return true;
    }
    return false;
  }

  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    for (int w : tm_.neighbor_slots(v)) {
      if (w >= 0 && !is_removed(v, w)) f(w);
    }
    for (const Change& c : set_) {
      if (!c.add) continue;
      if (c.edge.u == v) f(c.edge.v);
      if (c.edge.v == v) f(c.edge.u);
    }
  }

  bool improving() {
    ImprovKey before;
    for (int comp : touched_) {
      ++before.components;
      before.cycles += is_cycle_[comp];
      before.singletons += members_[comp].size() == 1;
    }
    ImprovKey after;
    ++epoch_;
    std::vector<int> stack;
    for (int comp : touched_) {
      for (int s : members_[comp]) {
        if (stamp_[s] == epoch_) continue;
        stamp_[s] = epoch_;
        stack.push_back(s);
        int size = 0;
        bool all_two = true;
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          ++size;
          int deg = 0;
          for_each_neighbor(v, [&](int w) {
            ++deg;
            if (stamp_[w] != epoch_) {
              stamp_[w] = epoch_;
              stack.push_back(w);
            }
          });
          all_two = all_two && deg == 2;
        }
        ++after.components;
        after.singletons += size == 1;
        after.cycles += size >= 3 && all_two;
      }
    }
    return after.better_than(before);
  }

  std::optional<ImprovMove> explore() {
    const int excess = excess_degree();
    if (excess == 0 && improving()) {
      ImprovMove move;
      for (const Change& c : set_) (c.add ? move.added : move.removed).push_back(c.edge);
      return move;
    }
    const int room = k_ - static_cast<int>(set_.size());
    if (room == 0 || excess > 2 * room) return std::nullopt;

    std::vector<Change> options;
    for (int comp : touched_) {
      for (int v : members_[comp]) {
        for (int w : tm_.neighbor_slots(v)) {
          if (w >= 0) options.push_back({make_edge(v, w), false});
        }
        for (int w : inst_.unit_neighbors(v)) {
          if (!tm_.has_edge(v, w)) options.push_back({make_edge(v, w), true});
        }
      }
    }
    std::vector<std::uint64_t> keys;
    keys.reserve(options.size());
    for (const Change& c : options) keys.push_back(key(c));
    std::vector<std::size_t> idx(options.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    std::uint64_t last = 0;
    bool have_last = false;
    for (std::size_t i : idx) {
      const std::uint64_t kc = keys[i];
      if (kc <= root_key_ || (have_last && kc == last)) continue;
      last = kc;
      have_last = true;
      std::vector<std::uint64_t> canon;
      bool already_in_set = false;
      for (const Change& c : set_) {
        const std::uint64_t kk = key(c);
        already_in_set = already_in_set || kk == kc;
        canon.push_back(kk);
      }
      if (already_in_set) continue;
      canon.push_back(kc);
      std::sort(canon.begin(), canon.end());
      if (seen_.insert(std::move(canon)).second) {
        const std::size_t touched_before = touched_.size();
        set_.push_back(options[i]);
        touch(options[i]);
        auto move = explore();
        set_.pop_back();
        touched_.resize(touched_before);
        if (move) return move;
      }
    }
    return std::nullopt;
  }

  const OneTwoInstance& inst_;
  const TwoMatching& tm_;
  int n_;
  int k_;
  std::vector<int> label_;
  std::vector<std::vector<int>> members_;
  std::vector<char> is_cycle_;
  std::vector<int> stamp_;
  std::vector<int> degree_;
  int epoch_ = 0;
  std::uint64_t root_key_ = 0;
  std::vector<Change> set_;
  std::vector<int> touched_;
  std::set<std::vector<std::uint64_t>> seen_;
};

}  // namespace

std::optional<ImprovMove> find_improving_improv_move(const OneTwoInstance& instance,
                                                     const TwoMatching& tm, int k) {
  if (k < 1 || k > kMaxImprovK) {
    throw InvalidInput("k-improv supports 1 <= k <= " + std::to_string(kMaxImprovK));
  }
  if (tm.size() != instance.size()) throw InvalidInput("2-matching and instance sizes differ");
  return ImprovSearch(instance, tm, k).run();
}

Tour k_improv(const OneTwoInstance& instance, const Tour& tour, int k, std::uint64_t seed,
              std::vector<ImprovKey>* key_trace) {
  TwoMatching tm = tour_to_two_matching(instance, tour);
  if (key_trace) key_trace->push_back(tm.key());
  while (auto move = find_improving_improv_move(instance, tm, k)) {
    TwoMatching next = apply_improv_move(instance, tm, *move);
    if (!next.key().better_than(tm.key())) {
      throw InvariantViolation("k-improv move did not improve the 2-matching");
    }
    tm = std::move(next);
    if (key_trace) key_trace->push_back(tm.key());
  }
  return two_matching_to_tour(instance, tm, seed);
}

}  // namespace kopt
