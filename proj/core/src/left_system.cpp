#include "urysohn/left_system.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace urysohn {

namespace {

void validate_system(const LeftSystem& system, const std::vector<QuotientAction>& quotients) {
  if (system.unknowns < 0) throw InvalidInput("negative unknown count");
  for (const auto& q : quotients) {
    if (q.alphabet().size() != quotients.front().alphabet().size()) {
      throw InvalidInput("quotients must share one alphabet");
    }
  }
  for (const auto& eq : system.equations) {
    if (eq.lhs < 0 || eq.lhs >= system.unknowns || (eq.rhs && (*eq.rhs < 0 || *eq.rhs >= system.unknowns))) {
      throw InvalidInput("equation refers to an unknown that does not exist");
    }
    if (eq.index < 0 || eq.index >= static_cast<int>(quotients.size())) {
      throw InvalidInput("equation refers to a subgroup index without a quotient");
    }
    for (const Letter& l : eq.g) {
      if (l.index < 0 || l.index >= quotients[eq.index].alphabet().size()) {
        throw InvalidInput("equation word uses an unknown letter");
      }
    }
  }
}

struct Slot {
  int quotient;
  int point;
};

}  // namespace

std::optional<std::vector<Word>> solve_left_system(const LeftSystem& system,
                                                   const std::vector<QuotientAction>& quotients,
                                                   std::size_t state_limit) {
  validate_system(system, quotients);
  const int letters = quotients.empty() ? 0 : quotients.front().alphabet().size();

  // Each unknown is only observed through the points it moves: base_i for lhs uses and
  // g.base_i for rhs uses. Its candidate values are the orbit of that tuple.
  std::vector<std::vector<Slot>> slots(system.unknowns);
  auto slot_of = [&](int unknown, int quotient, int point) {
    auto& list = slots[unknown];
    for (std::size_t s = 0; s < list.size(); ++s) {
      if (list[s].quotient == quotient && list[s].point == point) return static_cast<int>(s);
    }
    list.push_back({quotient, point});
    return static_cast<int>(list.size()) - 1;
  };
  struct Compiled {
    int lhs, lhs_slot;
    int rhs, rhs_slot;
    int constant;
  };
  std::vector<Compiled> compiled;
  for (const auto& eq : system.equations) {
    const QuotientAction& q = quotients[eq.index];
    Compiled c{eq.lhs, slot_of(eq.lhs, eq.index, q.base()), -1, -1, -1};
    const int moved = q.act(eq.g, q.base());
    if (eq.rhs) {
      c.rhs = *eq.rhs;
      c.rhs_slot = slot_of(*eq.rhs, eq.index, moved);
    } else {
      c.constant = moved;
    }
    compiled.push_back(c);
  }

  struct Orbit {
    std::vector<std::vector<int>> states;
    std::vector<int> parent;
    std::vector<int> via;
  };
  std::vector<Orbit> orbits(system.unknowns);
  for (int u = 0; u < system.unknowns; ++u) {
    Orbit& o = orbits[u];
    std::vector<int> start;
    for (const Slot& s : slots[u]) start.push_back(s.point);
    std::map<std::vector<int>, int> index{{start, 0}};
    o.states.push_back(start);
    o.parent.push_back(-1);
    o.via.push_back(-1);
    for (std::size_t i = 0; i < o.states.size(); ++i) {
      for (int l = 0; l < letters; ++l) {
        std::vector<int> next = o.states[i];
        for (std::size_t s = 0; s < next.size(); ++s) next[s] = quotients[slots[u][s].quotient].generator(l)(next[s]);
        if (index.try_emplace(next, static_cast<int>(o.states.size())).second) {
          if (o.states.size() >= state_limit) throw Error("left system search space too large");
          o.states.push_back(std::move(next));
          o.parent.push_back(static_cast<int>(i));
          o.via.push_back(l);
        }
      }
    }
  }

  std::vector<int> choice(system.unknowns, -1);
  auto consistent = [&](int upto) {
    for (const auto& c : compiled) {
      if (c.lhs > upto || (c.rhs >= 0 && c.rhs > upto)) continue;
      const int left = orbits[c.lhs].states[choice[c.lhs]][c.lhs_slot];
      const int right = c.rhs >= 0 ? orbits[c.rhs].states[choice[c.rhs]][c.rhs_slot] : c.constant;
      if (left != right) return false;
    }
    return true;
  };
  std::function<bool(int)> search = [&](int u) {
    if (u == system.unknowns) return true;
    for (std::size_t s = 0; s < orbits[u].states.size(); ++s) {
      choice[u] = static_cast<int>(s);
      if (consistent(u) && search(u + 1)) return true;
    }
    choice[u] = -1;
    return false;
  };
  if (!search(0)) return std::nullopt;

  std::vector<Word> values(system.unknowns);
  for (int u = 0; u < system.unknowns; ++u) {
    Word w;
    for (int s = choice[u]; orbits[u].parent[s] >= 0; s = orbits[u].parent[s]) w.push_back(Letter{orbits[u].via[s], false});
    values[u] = reduce_word(w);
  }
  if (!satisfies(system, quotients, values)) throw ConsistencyError("left system solution fails verification");
  return values;
}

bool satisfies(const LeftSystem& system, const std::vector<QuotientAction>& quotients,
               const std::vector<Word>& values) {
  validate_system(system, quotients);
  if (static_cast<int>(values.size()) != system.unknowns) return false;
  for (const auto& eq : system.equations) {
    const QuotientAction& q = quotients[eq.index];
    const int left = q.act(values[eq.lhs], q.base());
    const Word right = eq.rhs ? multiply(values[*eq.rhs], eq.g) : eq.g;
    if (left != q.act(right, q.base())) return false;
  }
  return true;
}

LeftSystem bad_configuration_system(int p, int q, const std::vector<std::pair<int, int>>& steps) {
  const int n = static_cast<int>(steps.size());
  LeftSystem system;
  if (n == 0) {
    system.unknowns = 1;
    system.equations.push_back({0, std::nullopt, Word{Letter{p, false}}, 0});
    system.equations.push_back({0, std::nullopt, Word{Letter{q, false}}, 0});
    return system;
  }
  system.unknowns = n + 1;
  system.equations.push_back({0, std::nullopt, Word{Letter{p, false}}, 0});
  for (int i = 0; i < n; ++i) {
    const Word link = reduce_word({Letter{steps[i].first, true}, Letter{steps[i].second, false}});
    system.equations.push_back({i + 1, i, link, 0});
  }
  system.equations.push_back({n, std::nullopt, Word{Letter{q, false}}, 0});
  return system;
}

}  // namespace urysohn
