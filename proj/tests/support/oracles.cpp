#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "urysohn/free_group.hpp"
#include "urysohn/isometry.hpp"

namespace oracle {

namespace {

bool is_metric(int n, const std::vector<Dist>& flat) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (flat[i * n + k] > flat[i * n + j] + flat[j * n + k]) return false;
      }
    }
  }
  return true;
}

std::vector<Dist> canonical(int n, const std::vector<Dist>& flat) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Dist> best;
  do {
    std::vector<Dist> relabeled(flat.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) relabeled[i * n + j] = flat[perm[i] * n + perm[j]];
    }
    if (best.empty() || relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double point_segment(const std::vector<double>& p, const std::vector<double>& a, const std::vector<double>& b) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 == 0.0 ? 0.0 : ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy);
}

}  // namespace

std::vector<FiniteMetricSpace> spaces_up_to_iso(int max_points, const std::vector<Dist>& values,
                                                const urysohn::DistanceValueSet& value_set) {
  std::vector<FiniteMetricSpace> out;
  for (int n = 1; n <= max_points; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::set<std::vector<Dist>> seen;
    std::vector<std::size_t> choice(pairs.size(), 0);
    for (;;) {
      std::vector<Dist> flat(n * n, 0);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        flat[pairs[e].first * n + pairs[e].second] = values[choice[e]];
        flat[pairs[e].second * n + pairs[e].first] = values[choice[e]];
      }
      if (is_metric(n, flat)) {
        const auto key = canonical(n, flat);
        if (seen.insert(key).second) {
          urysohn::DistanceMatrix m(n, std::vector<Dist>(n));
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = key[i * n + j];
          }
          std::vector<std::string> labels;
          for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
          std::string name = "X" + std::to_string(n);
          for (Dist d : key) name += std::to_string(d);
          out.emplace_back(name, labels, 1, m, value_set);
        }
      }
      std::size_t e = 0;
      while (e < choice.size() && ++choice[e] == values.size()) choice[e++] = 0;
      if (e == choice.size()) break;
    }
  }
  return out;
}

std::size_t katetov_grid_count(const FiniteMetricSpace& space, Dist bound) {
  const int n = space.size();
  std::vector<Dist> f(n, 1);
  std::size_t count = 0;
  if (bound < 1) return n == 0 ? 1 : 0;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (f[i] - f[j] > space.d(i, j) || space.d(i, j) > f[i] + f[j]) ok = false;
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < n && ++f[i] > bound) f[i++] = 1;
    if (i == n) break;
  }
  return count;
}

urysohn::QuotientAction random_accepted_action(const FiniteMetricSpace& space, int omega, std::mt19937_64& rng) {
  auto alphabet = std::make_shared<const urysohn::Alphabet>(space);
  const int n = space.size();
  std::vector<int> others(omega - 1);
  std::iota(others.begin(), others.end(), 1);
  std::shuffle(others.begin(), others.end(), rng);
  std::vector<int> phi(n);
  phi[0] = 0;
  for (int a = 1; a < n; ++a) phi[a] = others[a - 1];
  std::vector<urysohn::Permutation> gens;
  for (const auto& letter : alphabet->letters()) {
    std::vector<int> images(omega, -1);
    std::vector<bool> used(omega, false);
    for (int a : letter.domain()) {
      images[phi[a]] = phi[letter(a)];
      used[phi[letter(a)]] = true;
    }
    std::vector<int> free_targets;
    for (int t = 0; t < omega; ++t) {
      if (!used[t]) free_targets.push_back(t);
    }
    std::shuffle(free_targets.begin(), free_targets.end(), rng);
    std::size_t next = 0;
    for (int s = 0; s < omega; ++s) {
      if (images[s] < 0) images[s] = free_targets[next++];
    }
    gens.emplace_back(images);
  }
  return urysohn::QuotientAction(alphabet, 0, omega, std::move(gens), 0);
}

bool definition_bad_configuration(const urysohn::QuotientAction& action) {
  const auto& alphabet = action.alphabet();
  const auto& space = action.space();
  const int a0 = action.a0();
  const int base = action.base();
  const int omega = action.omega();
  std::vector<urysohn::Permutation> moves;
  for (const auto& g : action.generators()) {
    moves.push_back(g);
    moves.push_back(g.inverse());
  }
  // Cheapest step cost for every ordered pair (alpha, beta) reachable as x (p_i b, q_i b).
  const Dist none = std::numeric_limits<Dist>::max();
  std::vector<Dist> step(static_cast<std::size_t>(omega) * omega, none);
  std::vector<int> through_base;
  for (int p = 0; p < alphabet.size(); ++p) {
    if (alphabet.letter(p).defined_at(a0)) through_base.push_back(p);
  }
  for (int p : through_base) {
    for (int q : through_base) {
      const Dist cost = space.d(alphabet.letter(p)(a0), alphabet.letter(q)(a0));
      const std::pair<int, int> seed{action.generator(p)(base), action.generator(q)(base)};
      std::set<std::pair<int, int>> orbit{seed};
      std::vector<std::pair<int, int>> frontier{seed};
      while (!frontier.empty()) {
        const auto [u, v] = frontier.back();
        frontier.pop_back();
        for (const auto& g : moves) {
          const std::pair<int, int> next{g(u), g(v)};
          if (orbit.insert(next).second) frontier.push_back(next);
        }
      }
      for (const auto& [u, v] : orbit) {
        auto& s = step[static_cast<std::size_t>(u) * omega + v];
        s = std::min(s, cost);
      }
    }
  }
  for (int p : through_base) {
    for (int q : through_base) {
      const Dist required = space.d(alphabet.letter(p)(a0), alphabet.letter(q)(a0));
      const int start = action.generator(p)(base);
      const int goal = action.generator(q)(base);
      if (required == 0) continue;
      if (start == goal) return true;
      std::vector<bool> visited(omega, false);
      std::function<bool(int, Dist)> walk = [&](int at, Dist spent) {
        if (at == goal) return true;
        visited[at] = true;
        for (int next = 0; next < omega; ++next) {
          const Dist s = step[static_cast<std::size_t>(at) * omega + next];
          if (s == none || visited[next] || spent + s >= required) continue;
          if (walk(next, spent + s)) return true;
        }
        visited[at] = false;
        return false;
      };
      if (walk(start, 0)) return true;
    }
  }
  return false;
}

urysohn::QuotientAction cycle_action_p4() {
  const auto p4 = urysohn::make_path(4);
  auto alphabet = std::make_shared<const urysohn::Alphabet>(p4);
  urysohn::DistanceMatrix c7(7, std::vector<Dist>(7));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) c7[i][j] = std::min((i - j + 7) % 7, (j - i + 7) % 7);
  }
  const FiniteMetricSpace cycle(c7, urysohn::DistanceValueSet::integers(1));
  std::vector<urysohn::Permutation> gens;
  for (const auto& letter : alphabet->letters()) {
    const auto dom = letter.domain();
    if (dom.size() == 1 && dom[0] == 0) {
      std::vector<int> rotation(7);
      for (int i = 0; i < 7; ++i) rotation[i] = (i + letter(0)) % 7;
      gens.emplace_back(rotation);
      continue;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a : dom) pairs.emplace_back(a, letter(a));
    const auto g = urysohn::find_extension(cycle, pairs);
    if (!g) throw urysohn::ConsistencyError("letter does not extend to the 7-cycle");
    gens.push_back(*g);
  }
  return urysohn::QuotientAction(alphabet, 0, 7, std::move(gens), 0);
}

urysohn::EppaWitness cycle_witness_p4() {
  urysohn::DistanceMatrix c7(7, std::vector<Dist>(7));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) c7[i][j] = std::min((i - j + 7) % 7, (j - i + 7) % 7);
  }
  const FiniteMetricSpace cycle(c7, urysohn::DistanceValueSet::integers(1));
  auto w = urysohn::assemble_witness(urysohn::make_path(4), cycle, {0, 1, 2, 3}, urysohn::Provenance::manual);
  if (!w) throw urysohn::ConsistencyError("the 7-cycle is not a witness for P4");
  return *w;
}

double sampled_hull_distance(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b,
                             int samples) {
  double best = std::numeric_limits<double>::infinity();
  auto sweep = [&](const auto& from, const auto& to) {
    for (const auto& u1 : from) {
      for (const auto& u2 : from) {
        for (int s = 0; s <= samples; ++s) {
          const double t = static_cast<double>(s) / samples;
          const std::vector<double> p{u1[0] + t * (u2[0] - u1[0]), u1[1] + t * (u2[1] - u1[1])};
          for (const auto& v1 : to) {
            for (const auto& v2 : to) best = std::min(best, point_segment(p, v1, v2));
          }
        }
      }
    }
  };
  sweep(a, b);
  sweep(b, a);
  return best;
}

double sampled_hull_distance_nd(const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b,
                                std::uint64_t seed, int samples) {
  auto dist = [](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
    return std::sqrt(s);
  };
  double best = std::numeric_limits<double>::infinity();
  for (const auto& u : a) {
    for (const auto& v : b) best = std::min(best, dist(u, v));
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  auto combination = [&](const std::vector<std::vector<double>>& pts) {
    std::vector<double> w(pts.size());
    double total = 0.0;
    for (auto& x : w) total += (x = expo(rng));
    std::vector<double> out(pts.front().size(), 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += w[i] / total * pts[i][k];
    }
    return out;
  };
  for (int s = 0; s < samples; ++s) best = std::min(best, dist(combination(a), combination(b)));
  return best;
}

urysohn::Rational direct_quadratic_sum(const std::vector<urysohn::Permutation>& elements,
                                       const std::vector<urysohn::ExactVector>& phi, int x, int y) {
  urysohn::Rational sum = 0;
  for (const auto& g : elements) {
    int gx = -1;
    int gy = -1;
    for (int z = 0; z < g.degree(); ++z) {
      if (g(z) == x) gx = z;
      if (g(z) == y) gy = z;
    }
    for (std::size_t k = 0; k < phi[gx].size(); ++k) {
      const urysohn::Rational diff = phi[gx][k] - phi[gy][k];
      sum += diff * diff;
    }
  }
  return sum;
}

}  // namespace oracle
