#pragma once

#include <optional>
#include <vector>

#include "urysohn/quotient.hpp"

namespace urysohn {

/// x_lhs = x_rhs . g (mod H_index), or x_lhs = g (mod H_index) when rhs is empty.
struct LeftEquation {
  int lhs = 0;
  std::optional<int> rhs;
  Word g;
  int index = 0;
};

struct LeftSystem {
  int unknowns = 0;
  std::vector<LeftEquation> equations;
};

/// H_i is the stabilizer of the base point of quotients[i]; all quotients share one alphabet.
/// Values are words; x = y mod H_i means x.base_i = y.base_i.
std::optional<std::vector<Word>> solve_left_system(const LeftSystem& system,
                                                   const std::vector<QuotientAction>& quotients,
                                                   std::size_t state_limit = 2'000'000);

bool satisfies(const LeftSystem& system, const std::vector<QuotientAction>& quotients,
               const std::vector<Word>& values);

/// System in y_i = x_i p_i equivalent to the bad configuration chain for the given letters:
/// y_1 = p, y_{i+1} = y_i (p_i^-1 q_i), y_{n+1} = q, all modulo the stabilizer of quotient 0.
LeftSystem bad_configuration_system(int p, int q, const std::vector<std::pair<int, int>>& steps);

}  // namespace urysohn
