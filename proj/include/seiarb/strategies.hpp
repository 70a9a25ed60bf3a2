#pragma once

#include <array>
#include <string>
#include <vector>

#include "seiarb/model.hpp"

namespace seiarb::strategies {

// Activation mask over (u1, u2, u3, u4). Scenario A = single control,
// B = pairs, C = triples, D = all four.
struct StrategyMask {
  int id = 0;
  char scenario = '-';
  std::array<bool, 4> active{{false, false, false, false}};
  std::string label;
};

// The 14 named strategies, in id order.
const std::vector<StrategyMask>& all_strategies();

// Mask with no active controls (baseline run). id 0, scenario '-'.
const StrategyMask& no_control();

// Throws ConfigError unless 1 <= id <= 14.
const StrategyMask& strategy_by_id(int id);

// Masks belonging to one scenario letter. Throws ConfigError unless A-D.
std::vector<StrategyMask> scenario_strategies(char scenario);

// Zeroes inactive components, passes active ones through.
ControlVec apply_mask(const StrategyMask& mask, const ControlVec& u);

}  // namespace seiarb::strategies
