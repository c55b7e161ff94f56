#include <algorithm>
#include <chrono>
#include <limits>
#include <memory>
#include <numeric>
#include <random>

#include "urysohn/eppa.hpp"

namespace urysohn {

namespace {

struct BudgetExceeded {};

using Clock = std::chrono::steady_clock;

/// Backtracking over letter completions for a fixed carrier size.
class CompletionSearch {
 public:
  CompletionSearch(const FiniteMetricSpace& x, const std::vector<PartialIsometry>& letters, int omega,
                   std::uint64_t node_budget, Clock::time_point deadline, std::uint64_t rng_seed, bool randomized,
                   SearchStats& stats)
      : x_(x),
        letters_(letters),
        n_(x.size()),
        w_(omega),
        node_budget_(node_budget),
        deadline_(deadline),
        rng_(rng_seed),
        randomized_(randomized),
        stats_(stats) {
    order_.resize(letters_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return letters_[a].domain_size() > letters_[b].domain_size();
    });
    assigned_.resize(letters_.size());
    pair_id_.assign(static_cast<std::size_t>(w_) * w_, -1);
    for (int a = 0; a < w_; ++a) {
      for (int b = a + 1; b < w_; ++b) {
        pair_id_[static_cast<std::size_t>(a) * w_ + b] = pair_id_[static_cast<std::size_t>(b) * w_ + a] = pairs_++;
      }
    }
    parent_.resize(pairs_);
    label_.resize(pairs_);
    push_group();
  }

  /// Throws BudgetExceeded; returns false only when the space of completions is exhausted.
  bool run() { return solve(0); }
  const std::vector<Permutation>& assignment() const { return assigned_; }

 private:
  int pair(int a, int b) const { return pair_id_[static_cast<std::size_t>(a) * w_ + b]; }

  int find(int p) {
    while (parent_[p] != p) {
      parent_[p] = parent_[parent_[p]];
      p = parent_[p];
    }
    return p;
  }

  void unite(int p, int q) {
    p = find(p);
    q = find(q);
    if (p != q) parent_[std::max(p, q)] = std::min(p, q);
  }

  // Pair orbits under the group and the partial map; each orbit carries the smallest
  // seed distance in it, and shortest paths between points of X must not undercut d_X.
  bool admissible(const std::vector<int>& partial) {
    if (++nodes_ > node_budget_) throw BudgetExceeded{};
    ++stats_.attempts;
    if ((nodes_ & 255) == 0 && Clock::now() > deadline_) throw BudgetExceeded{};
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& g : gens_) {
      for (int a = 0; a < w_; ++a) {
        for (int b = a + 1; b < w_; ++b) unite(pair(a, b), pair(g(a), g(b)));
      }
    }
    for (int a = 0; a < w_; ++a) {
      if (partial[a] < 0) continue;
      for (int b = a + 1; b < w_; ++b) {
        if (partial[b] >= 0) unite(pair(a, b), pair(partial[a], partial[b]));
      }
    }
    std::fill(label_.begin(), label_.end(), kUnreachableLabel);
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        const int root = find(pair(a, b));
        label_[root] = std::min(label_[root], x_.d(a, b));
      }
    }
    std::vector<Dist> dist(w_);
    std::vector<char> done(w_);
    for (int s = 0; s < n_; ++s) {
      std::fill(dist.begin(), dist.end(), kUnreachableLabel);
      std::fill(done.begin(), done.end(), 0);
      dist[s] = 0;
      for (int iter = 0; iter < w_; ++iter) {
        int u = -1;
        for (int v = 0; v < w_; ++v) {
          if (!done[v] && dist[v] != kUnreachableLabel && (u < 0 || dist[v] < dist[u])) u = v;
        }
        if (u < 0) break;
        done[u] = 1;
        for (int v = 0; v < w_; ++v) {
          if (done[v] || v == u) continue;
          const Dist l = label_[find(pair(u, v))];
          if (l != kUnreachableLabel && dist[u] + l < dist[v]) dist[v] = dist[u] + l;
        }
      }
      for (int t = s + 1; t < n_; ++t) {
        if (dist[t] < x_.d(s, t)) {
          stats_.best_defect = std::max(stats_.best_defect, x_.d(s, t) - dist[t]);
          return false;
        }
      }
    }
    return true;
  }

  void push_group() { groups_.push_back(std::make_unique<PermutationGroup>(w_, gens_)); }

  bool solve(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int letter = order_[pos];
    const PartialIsometry& p = letters_[letter];
    std::vector<std::pair<int, int>> constraints;
    for (int a : p.domain()) constraints.emplace_back(a, p(a));
    if (auto g = groups_.back()->transporter(constraints)) {
      assigned_[letter] = std::move(*g);
      return solve(pos + 1);
    }
    std::vector<int> partial(w_, -1);
    std::vector<char> used(w_, 0);
    for (int a : p.domain()) {
      partial[a] = p(a);
      used[p(a)] = 1;
    }
    if (!admissible(partial)) return false;
    return complete(pos, letter, partial, used, 0);
  }

  bool fixed_by_group(int v) const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& g) { return g(v) == v; });
  }

  bool complete(std::size_t pos, int letter, std::vector<int>& partial, std::vector<char>& used, int from) {
    int x = from;
    while (x < w_ && partial[x] >= 0) ++x;
    if (x == w_) {
      Permutation pi(partial);
      gens_.push_back(pi);
      push_group();
      assigned_[letter] = std::move(pi);
      if (solve(pos + 1)) return true;
      gens_.pop_back();
      groups_.pop_back();
      return false;
    }
    // Untouched points fixed by the group are interchangeable; only the smallest is tried.
    int fresh = -1;
    for (int v = n_; v < w_; ++v) {
      if (!used[v] && partial[v] < 0 && v != x && fixed_by_group(v)) {
        fresh = v;
        break;
      }
    }
    std::vector<int> candidates;
    for (int y = 0; y < w_; ++y) {
      if (used[y]) continue;
      if (y != x && y >= n_ && !used[y] && partial[y] < 0 && fixed_by_group(y) && y != fresh) continue;
      candidates.push_back(y);
    }
    if (randomized_) std::shuffle(candidates.begin(), candidates.end(), rng_);
    for (int y : candidates) {
      partial[x] = y;
      used[y] = 1;
      if (admissible(partial) && complete(pos, letter, partial, used, x + 1)) return true;
      partial[x] = -1;
      used[y] = 0;
    }
    return false;
  }

  static constexpr Dist kUnreachableLabel = std::numeric_limits<Dist>::max() / 4;

  const FiniteMetricSpace& x_;
  const std::vector<PartialIsometry>& letters_;
  int n_;
  int w_;
  std::uint64_t node_budget_;
  std::uint64_t nodes_ = 0;
  Clock::time_point deadline_;
  std::mt19937_64 rng_;
  bool randomized_;
  SearchStats& stats_;
  std::vector<int> order_;
  std::vector<Permutation> assigned_;
  std::vector<Permutation> gens_;
  std::vector<std::unique_ptr<PermutationGroup>> groups_;
  std::vector<int> pair_id_;
  int pairs_ = 0;
  std::vector<int> parent_;
  std::vector<Dist> label_;
};

}  // namespace

SearchOutcome search_witness_quotient(const FiniteMetricSpace& x, const QuotientBudget& budget) {
  if (x.size() == 0) throw InvalidInput("space must be non-empty");
  if (budget.max_omega < x.size()) throw InvalidInput("max_omega is smaller than the space");
  if (budget.max_attempts == 0) throw InvalidInput("attempt budget must be positive");
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(
                                    budget.time_limit_s > 0 ? budget.time_limit_s : 1e9));
  auto alphabet = std::make_shared<const Alphabet>(x);
  SearchOutcome out;
  out.stats.seed = budget.seed;
  const int lo = x.size();
  const int hi = budget.max_omega;
  std::vector<char> exhausted(hi + 1, 0);
  std::uint64_t per_omega = 2000;
  const bool randomized = budget.strategy == QuotientStrategy::randomized;
  for (int round = 0;; ++round) {
    bool any_open = false;
    for (int omega = lo; omega <= hi; ++omega) {
      if (exhausted[omega]) continue;
      if (out.stats.attempts >= budget.max_attempts || Clock::now() > deadline) break;
      any_open = true;
      out.stats.omega_tried = std::max(out.stats.omega_tried, omega);
      const std::uint64_t allowance = std::min(per_omega, budget.max_attempts - out.stats.attempts);
      const std::uint64_t stream = budget.seed ^ (static_cast<std::uint64_t>(omega) << 32) ^ static_cast<std::uint64_t>(round);
      CompletionSearch search(x, alphabet->letters(), omega, allowance, deadline, stream, randomized, out.stats);
      bool found = false;
      try {
        found = search.run();
        if (!found) exhausted[omega] = 1;
      } catch (const BudgetExceeded&) {
        continue;
      }
      if (!found) continue;
      QuotientAction action(alphabet, 0, omega, search.assignment(), 0);
      EppaWitness w = witness_from_quotient(action);
      out.stats.omega = omega;
      out.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
      w.stats = out.stats;
      out.witness = std::move(w);
      return out;
    }
    if (!any_open) break;
    if (out.stats.attempts >= budget.max_attempts || Clock::now() > deadline) break;
    per_omega *= 2;
  }
  out.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
  const bool all_exhausted = std::all_of(exhausted.begin() + lo, exhausted.end(), [](char c) { return c != 0; });
  out.stats.budget_exhausted = !all_exhausted;
  out.stats.note = all_exhausted ? "every carrier size up to max_omega was searched exhaustively without a witness"
                                 : "budget exhausted; existence unknown";
  return out;
}

}  // namespace urysohn
