#include <algorithm>

#include "urysohn/eppa.hpp"
#include "urysohn/isometry.hpp"

namespace urysohn {

namespace {

std::vector<Permutation> distinct_globals(const EppaWitness& w) {
  std::vector<Permutation> out;
  for (const auto& e : w.extensions) {
    if (!e.global.is_identity() && std::find(out.begin(), out.end(), e.global) == out.end()) out.push_back(e.global);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Tower build_tower(const FiniteMetricSpace& x, int levels, const QuotientBudget& budget) {
  if (levels < 1) throw InvalidInput("a tower needs at least one level");
  Tower tower;
  tower.levels.push_back(x);
  for (int i = 0; i < levels; ++i) {
    auto outcome = search_witness_quotient(tower.levels.back(), budget);
    if (!outcome.witness) {
      tower.failure = "level " + std::to_string(i + 1) + ": " + outcome.stats.note;
      break;
    }
    tower.levels.push_back(outcome.witness->witness);
    tower.groups.emplace_back(outcome.witness->witness.size(), distinct_globals(*outcome.witness));
    tower.steps.push_back(std::move(*outcome.witness));
  }
  // A generator g of groups[i] is an isometry of levels[i + 1]; as a total partial isometry it has
  // an extension in steps[i + 1], which lies in groups[i + 1].
  for (std::size_t i = 0; i + 1 < tower.groups.size(); ++i) {
    std::vector<Permutation> images;
    const EppaWitness& next = tower.steps[i + 1];
    for (const auto& g : tower.groups[i].generators()) {
      const PartialIsometry total = PartialIsometry::restriction(g, [&] {
        std::vector<int> all(g.degree());
        for (int k = 0; k < g.degree(); ++k) all[k] = k;
        return all;
      }());
      const auto it = std::find_if(next.extensions.begin(), next.extensions.end(),
                                   [&](const Extension& e) { return e.partial == total; });
      if (it == next.extensions.end()) throw ConsistencyError("tower step lacks the extension of a generator");
      images.push_back(it->global);
    }
    tower.compatibility.push_back(std::move(images));
  }
  return tower;
}

ValidationReport verify_tower(const Tower& tower) {
  ValidationReport report;
  if (tower.steps.size() + 1 != tower.levels.size() || tower.groups.size() != tower.steps.size()) {
    report.add("shape", {}, "levels, steps and groups are inconsistent");
    return report;
  }
  for (std::size_t i = 0; i < tower.steps.size(); ++i) {
    const int ii = static_cast<int>(i);
    const auto& step = tower.steps[i];
    if (!(step.base == tower.levels[i]) || !(step.witness == tower.levels[i + 1])) {
      report.add("chain", {ii}, "step does not connect consecutive levels");
    }
    for (const auto& v : verify_witness(step).violations()) report.add("step-" + v.kind, {ii}, v.detail);
    if (tower.levels[i + 1].size() < tower.levels[i].size()) report.add("size", {ii}, "levels shrink");
    for (const auto& g : tower.groups[i].generators()) {
      if (std::none_of(step.extensions.begin(), step.extensions.end(),
                       [&](const Extension& e) { return e.global == g; })) {
        report.add("group", {ii}, "generator is not an extension of the step");
      }
    }
  }
  for (std::size_t i = 0; i < tower.compatibility.size(); ++i) {
    const int ii = static_cast<int>(i);
    const auto& embed = tower.steps[i + 1].embed;
    const auto& gens = tower.groups[i].generators();
    if (tower.compatibility[i].size() != gens.size()) {
      report.add("compatibility", {ii}, "one image per generator is required");
      continue;
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& h = tower.compatibility[i][j];
      if (!tower.groups[i + 1].contains(h)) report.add("compatibility", {ii, static_cast<int>(j)}, "image outside G_{i+1}");
      for (int z = 0; z < gens[j].degree(); ++z) {
        if (h(embed[z]) != embed[gens[j](z)]) {
          report.add("compatibility", {ii, static_cast<int>(j)}, "image does not restrict to the generator");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace urysohn
