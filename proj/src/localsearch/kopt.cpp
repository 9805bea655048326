#include "kopt/kopt.hpp"

#include <algorithm>

#include "kopt/error.hpp"

namespace kopt {
namespace {

// Removing r tour edges splits the tour into segments S_0..S_{r-1}; S_j runs from
// order[p_j + 1] to order[p_{j+1}]. A reconnection keeps S_0 forward and visits the other
// segments in some order and orientation.
template <TspInstance I>
class KMoveScanner {
 public:
  KMoveScanner(const I& instance, const Tour& tour) : inst_(instance), tour_(tour), n_(tour.size()) {}

  std::optional<KMove> scan(int r) {
    r_ = r;
    positions_.assign(r, 0);
    first_.assign(r, 0);
    last_.assign(r, 0);
    used_.assign(r, 0);
    seq_.clear();
    return choose_position(0, 0);
  }

 private:
  std::optional<KMove> choose_position(int depth, int start) {
    if (depth == r_) return try_tuple();
    for (int p = start; p <= n_ - (r_ - depth); ++p) {
      positions_[depth] = p;
      if (auto move = choose_position(depth + 1, p + 1)) return move;
    }
    return std::nullopt;
  }

  std::optional<KMove> try_tuple() {
    removed_cost_ = 0;
    removed_.clear();
    for (int j = 0; j < r_; ++j) {
      const int p = positions_[j];
      const int q = positions_[(j + 1) % r_];
      first_[j] = tour_[(p + 1) % n_];
      last_[j] = tour_[q];
      removed_.push_back(tour_.edge(p));
      removed_cost_ += inst_.cost(tour_[p], tour_[(p + 1) % n_]);
    }
    used_.assign(r_, 0);
    used_[0] = 1;
    seq_.clear();
    added_.clear();
    return extend(last_[0], 0);
  }

  bool is_removed(int a, int b) const {
    const Edge e = make_edge(a, b);
    for (const Edge& f : removed_) {
      if (f == e) return true;
    }
    return false;
  }

  std::optional<KMove> extend(int exit_vertex, Cost added_cost) {
    if (static_cast<int>(seq_.size()) == r_ - 1) {
      if (is_removed(exit_vertex, first_[0])) return std::nullopt;
      const Cost delta = added_cost + inst_.cost(exit_vertex, first_[0]) - removed_cost_;
      if (delta >= 0) return std::nullopt;
      KMove move;
      move.removed = removed_;
      move.added = added_;
      move.added.push_back(make_edge(exit_vertex, first_[0]));
      move.delta = delta;
      return move;
    }
    for (int s = 1; s < r_; ++s) {
      if (used_[s]) continue;
      for (int reversed = 0; reversed < 2; ++reversed) {
        if (reversed && first_[s] == last_[s]) break;
        const int entry = reversed ? last_[s] : first_[s];
        if (is_removed(exit_vertex, entry)) continue;
        const int next_exit = reversed ? first_[s] : last_[s];
        used_[s] = 1;
        seq_.push_back(s);
        added_.push_back(make_edge(exit_vertex, entry));
        auto move = extend(next_exit, added_cost + inst_.cost(exit_vertex, entry));
        added_.pop_back();
        seq_.pop_back();
        used_[s] = 0;
        if (move) return move;
      }
    }
    return std::nullopt;
  }

  const I& inst_;
  const Tour& tour_;
  int n_;
  int r_ = 0;
  std::vector<int> positions_;
  std::vector<int> first_;
  std::vector<int> last_;
  std::vector<char> used_;
  std::vector<int> seq_;
  std::vector<Edge> removed_;
  std::vector<Edge> added_;
  Cost removed_cost_ = 0;
};

}  // namespace

template <TspInstance I>
std::optional<KMove> find_improving_kmove(const I& instance, const Tour& tour, int k) {
  if (k < 2) throw InvalidInput("k-Opt needs k >= 2");
  if (tour.size() != instance.size()) throw_dimension_mismatch(instance.size(), tour.size());
  KMoveScanner<I> scanner(instance, tour);
  const int max_r = std::min(k, tour.size());
  for (int r = 2; r <= max_r; ++r) {
    if (auto move = scanner.scan(r)) return move;
  }
  return std::nullopt;
}

template <TspInstance I>
Tour k_opt(const I& instance, Tour tour, int k, std::vector<Cost>* cost_trace) {
  Cost cost = tour_cost(instance, tour);
  if (cost_trace) cost_trace->push_back(cost);
  while (auto move = find_improving_kmove(instance, tour, k)) {
    tour = apply_move(tour, *move);
    const Cost next = tour_cost(instance, tour);
    if (next != cost + move->delta || next >= cost) {
      throw InvariantViolation("k-move did not decrease the tour cost as predicted");
    }
    cost = next;
    if (cost_trace) cost_trace->push_back(cost);
  }
  return tour;
}

#define KOPT_INSTANTIATE(I)                                                              \
  template std::optional<KMove> find_improving_kmove<I>(const I&, const Tour&, int); \
  template Tour k_opt<I>(const I&, Tour, int, std::vector<Cost>*);

KOPT_INSTANTIATE(MetricInstance)
KOPT_INSTANTIATE(GraphInstance)
KOPT_INSTANTIATE(OneTwoInstance)

}  // namespace kopt
