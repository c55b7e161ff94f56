#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "urysohn/averaging.hpp"
#include "urysohn/bad_configuration.hpp"
#include "urysohn/convexity.hpp"
#include "urysohn/coset_graph.hpp"
#include "urysohn/eppa.hpp"
#include "urysohn/hull.hpp"
#include "urysohn/io.hpp"
#include "urysohn/isometry.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/probe.hpp"
#include "urysohn/trees.hpp"

using namespace urysohn;
namespace fs = std::filesystem;

namespace {

class Failures {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && messages_.size() < 5) messages_.push_back(what);
    ok_ = ok_ && condition;
  }
  bool ok() const { return ok_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  bool ok_ = true;
  std::vector<std::string> messages_;
};

using Check = std::function<void(Failures&)>;

ExactVector ev(std::initializer_list<long> xs) {
  ExactVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<FiniteMetricSpace> small_spaces() {
  std::vector<FiniteMetricSpace> out;
  for (auto& s : oracle::spaces_up_to_iso(4, {1, 2}, DistanceValueSet::finite({1, 2}))) {
    if (s.size() > 0) out.push_back(std::move(s));
  }
  return out;
}

void eppa_gate(Failures& f) {
  for (const auto& space : small_spaces()) {
    QuotientBudget budget;
    budget.max_omega = 64;
    budget.time_limit_s = 60.0;
    budget.seed = 1;
    const auto outcome = search_witness_quotient(space, budget);
    f.expect(outcome.witness.has_value(), "no witness for " + space.name());
    if (!outcome.witness) continue;
    f.expect(verify_witness(*outcome.witness).ok(), "witness rejected for " + space.name());
    bool equilateral = true;
    for (int i = 0; i < space.size(); ++i) {
      for (int j = i + 1; j < space.size(); ++j) equilateral = equilateral && space.d(i, j) == space.d(0, 1);
    }
    if (equilateral) f.expect(outcome.witness->witness.size() == space.size(), "Z != X for " + space.name());
  }
}

void p4_regression(Failures& f) {
  const auto restricts = [&](const EppaWitness& w, const std::string& who) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) f.expect(w.witness.d(w.embed[i], w.embed[j]) == std::abs(i - j), who + " restriction");
    }
  };
  QuotientBudget budget;
  budget.max_omega = 16;
  budget.seed = 7;
  const auto outcome = search_witness_quotient(make_path(4), budget);
  f.expect(outcome.witness && outcome.witness->witness.size() <= 8, "P4 search");
  if (outcome.witness) {
    f.expect(verify_witness(*outcome.witness).ok(), "P4 search witness rejected");
    restricts(*outcome.witness, "search");
  }
  const auto action = oracle::cycle_action_p4();
  const auto graph = build_coset_graph(action);
  const auto phi = action.phi();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) f.expect(graph.distance(phi[i], phi[j]) == std::abs(i - j), "cycle path restriction");
  }
  const auto fixture = witness_from_quotient(action);
  f.expect(fixture.witness.size() == 7 && verify_witness(fixture).ok(), "cycle fixture");
  restricts(fixture, "fixture");
}

void katetov_oracle(Failures& f) {
  for (const auto& space : oracle::spaces_up_to_iso(3, {1, 2, 3}, DistanceValueSet::integers(1))) {
    for (Dist bound = 1; bound <= 4; ++bound) {
      const auto count = enumerate_katetov(space, DistanceValueSet::integers(1), bound).size();
      f.expect(count == oracle::katetov_grid_count(space, bound), "count mismatch on " + space.name());
    }
  }
  f.expect(enumerate_katetov(make_path(2), DistanceValueSet::integers(1), 2).size() == 4, "pinned count 4");
}

void sphere_suite(Failures& f) {
  for (int m = 3; m <= 12; ++m) {
    for (int k = 1; k <= m - 2; ++k) {
      for (int n = 1; n <= 4; ++n) {
        const std::string id = std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n);
        const auto w = build_sphere_witness(m, k, n);
        f.expect(validate_sphere_witness(w).ok(), "witness " + id);
        const auto r = realize_t_epsilon(w);
        f.expect(validate_space(r.space.matrix(), r.space.scale(), r.space.value_set()).ok(), "realization " + id);
      }
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const auto w = build_sphere_witness(6, 2, 4);
  const auto r = realize_t_epsilon(w);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  f.expect(validate_sphere_witness(w).ok() && r.points.size() == 16, "m=6 k=2 N=4");
  f.expect(elapsed < 10.0, "m=6 k=2 N=4 took " + std::to_string(elapsed) + " s");
}

void bad_configuration_equivalence(Failures& f) {
  std::mt19937_64 rng(2024);
  const auto spaces = oracle::spaces_up_to_iso(4, {1, 2, 3}, DistanceValueSet::integers(1));
  int instances = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto& space = spaces[1 + rng() % (spaces.size() - 1)];
    if (space.size() == 0) continue;
    const int omega = space.size() + static_cast<int>(rng() % (13 - space.size()));
    const auto action = oracle::random_accepted_action(space, omega, rng);
    const bool shortest = detect_bad_configuration(action, build_coset_graph(action)).has_value();
    f.expect(shortest == oracle::definition_bad_configuration(action), "verdicts differ on " + space.name());
    ++instances;
  }
  f.expect(instances >= 20, "too few instances");
  for (const auto& space : small_spaces()) {
    auto alphabet = std::make_shared<const Alphabet>(space);
    const QuotientAction trivial(alphabet, 0, 1, std::vector<Permutation>(alphabet->size(), Permutation::identity(1)));
    f.expect(check_quotient(trivial).ok() == (space.size() < 2), "trivial quotient on " + space.name());
  }
}

std::vector<PermutationGroup> subgroups(const PermutationGroup& group) {
  const auto elements = group.elements();
  std::set<std::vector<Permutation>> seen;
  std::vector<PermutationGroup> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      PermutationGroup h(group.degree(), {elements[i], elements[j]});
      auto key = h.elements();
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(std::move(h));
    }
  }
  return out;
}

void averaging_identities(Failures& f) {
  std::mt19937_64 rng(11);
  for (const auto& space : oracle::spaces_up_to_iso(4, {1, 2, 3}, DistanceValueSet::integers(1))) {
    if (space.size() == 0) continue;
    std::vector<ExactVector> phi;
    for (int i = 0; i < space.size(); ++i) {
      phi.push_back(ev({static_cast<long>(rng() % 7), static_cast<long>(rng() % 7) - 3}));
    }
    for (const auto& group : subgroups(compute_isometry_group(space))) {
      const auto e = average_map(space, group, phi);
      f.expect(check_averaging(e).ok(), "averaging checks on " + space.name());
      const auto elements = group.elements();
      for (int x = 0; x < space.size(); ++x) {
        for (int y = x + 1; y < space.size(); ++y) {
          f.expect(e.squared_distance(x, y) * static_cast<long>(elements.size()) ==
                       oracle::direct_quadratic_sum(elements, phi, x, y),
                   "quadratic mean on " + space.name());
        }
      }
    }
  }
  const auto triangle = make_uniform(3);
  const auto e = average_map(triangle, compute_isometry_group(triangle), {ev({0, 0}), ev({1, 0}), ev({0, 2})});
  const auto transform = check_metric_transform(e);
  f.expect(transform.exists && transform.squared_table.size() == 1, "triangle transform");
}

void convexity_numerics(Failures& f) {
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.1 * i);
  for (const auto& point : modulus_convexity(2.0, 2, grid, 1)) {
    f.expect(std::abs(point.delta - delta_l2(point.eps)) <= 1e-6, "delta l2 at " + std::to_string(point.eps));
  }
  for (const auto& point : modulus_convexity(1.0, 2, {0.5, 1.0, 1.5, 2.0})) {
    f.expect(std::abs(point.delta) <= 1e-12, "delta l1");
  }
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> x(4);
      for (auto& v : x) v = normal(rng);
      const auto diag = check_support_functional(p, x, support_functional(p, x));
      f.expect(diag.dual_norm_error <= 1e-10 && diag.norming_error <= 1e-10, "support functional");
    }
  }
  std::mt19937_64 hull_rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<double>> a(4), b(4);
    for (auto& v : a) v = {u(hull_rng), u(hull_rng)};
    for (auto& v : b) v = {1.2 + u(hull_rng), u(hull_rng) + 0.5 * u(hull_rng)};
    const double gap = std::abs(hull_separation(a, b).distance - oracle::sampled_hull_distance(a, b));
    f.expect(gap <= 1e-4, "hull instance " + std::to_string(trial));
  }
}

void check_tree(Failures& f, const NEpsTree& tree, const std::string& who) {
  f.expect(validate_tree(tree).ok(), who + " rejected");
  for (const auto& [address, node] : tree.nodes) {
    if (static_cast<int>(address.size()) == tree.depth || tree.depth == 0) continue;
    auto broken = tree;
    broken.nodes[address][0] += Rational(1, 1000000);
    f.expect(validate_tree(broken).has("midpoint"), who + " perturbation at '" + address + "' accepted");
  }
}

void tree_suite(Failures& f) {
  std::vector<std::vector<ExactVector>> sets(4);
  sets[1] = {ev({0, 0}), ev({2, 0}), ev({0, 2}), ev({2, 2})};
  sets[2] = {ev({0, 0}), ev({0, 2})};
  sets[3] = {ev({2, 0}), ev({2, 2})};
  check_tree(f, tree_from_nested_sets(sets, Rational(2), Rational(3)), "square");
  for (const auto& [m, k, n] : std::vector<std::tuple<int, int, int>>{{6, 2, 1}, {6, 2, 3}, {8, 3, 4}, {12, 5, 2}}) {
    const auto w = build_sphere_witness(m, k, n);
    const auto r = realize_t_epsilon(w);
    const auto cert = convexity_probe(w, r, kuratowski_coordinates(r.space, w.fragment.size()));
    f.expect(cert.tree.has_value(), "probe emitted no tree");
    if (cert.tree) check_tree(f, *cert.tree, "probe tree");
  }
}

int run(const std::string& command) {
  const int status = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json without_timestamp(const fs::path& path) {
  Json j = load_json(path);
  j.erase("timestamp");
  return j;
}

void determinism(Failures& f) {
  const auto w = oracle::cycle_witness_p4();
  f.expect(verify_witness(witness_from_json(Json::parse(dump_json(witness_to_json(w))))).ok(), "witness reload");
  const auto sw = build_sphere_witness(6, 2, 2);
  f.expect(validate_sphere_witness(sphere_witness_from_json(sphere_witness_to_json(sw))).ok(), "sphere witness reload");
#ifdef URYSOHN_FORGE_PATH
  const std::string forge = std::string("\"") + URYSOHN_FORGE_PATH + "\"";
  const std::string data = URYSOHN_DATA_DIR;
  const fs::path dir = fs::temp_directory_path() / ("urysohn-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"search", "eppa search " + data + "/p4.json --strategy randomized --max-omega 16"},
      {"tower", "eppa tower " + data + "/p3.json --levels 1"},
      {"sphere", "sphere-witness --m 6 --k 2 --n 3 --realize"},
      {"probe", "probe tree --m 6 --k 2 --n 3"},
      {"grow", "grow " + data + "/triangle.json --steps 3 --bound 2"},
  };
  for (const auto& [name, args] : commands) {
    std::vector<fs::path> outputs;
    for (int run_index = 0; run_index < 2; ++run_index) {
      const fs::path out = dir / (name + std::to_string(run_index) + ".json");
      const int code = run(forge + " --seed 42 --out \"" + out.string() + "\" " + args);
      f.expect(code == 0, name + " exited " + std::to_string(code));
      outputs.push_back(out);
    }
    if (!fs::exists(outputs[0]) || !fs::exists(outputs[1])) continue;
    f.expect(without_timestamp(outputs[0]) == without_timestamp(outputs[1]), name + " artifacts differ");
    if (name != "grow") f.expect(run(forge + " verify \"" + outputs[0].string() + "\"") == 0, name + " does not re-verify");
  }
  fs::remove_all(dir);
#else
  f.expect(false, "built without the command line tool");
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"EPPA gate on all spaces with at most 4 points and distances in {1,2}", eppa_gate},
      {"P4 witness of size at most 8 with exact restriction", p4_regression},
      {"Katetov enumeration matches the grid oracle", katetov_oracle},
      {"sphere witnesses for m <= 12, N <= 4 and the m=6 k=2 N=4 timing", sphere_suite},
      {"bad-configuration verdicts match the definition; trivial quotients rejected", bad_configuration_equivalence},
      {"averaging identities and the triangle metric transform", averaging_identities},
      {"convexity numerics, support functionals and hull separation", convexity_numerics},
      {"tree validator, constructor and perturbation rejection", tree_suite},
      {"fixed-seed determinism and certificate re-verification", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    try {
      criteria[i].second(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (f.ok() ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << "\n";
    for (const auto& m : f.messages()) std::cout << "       " << m << "\n";
    if (!f.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
