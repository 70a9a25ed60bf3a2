#include "seiarb/strategies.hpp"

#include <string>

#include "seiarb/errors.hpp"

namespace seiarb::strategies {

namespace {

const char* kControlPhrase[4] = {
    "physical or social distancing",
    "personal hygiene and surface cleaning",
    "safety measures by exposed and infected individuals",
    "fumigation of schools and public facilities",
};

StrategyMask make(int id, char scenario, std::array<bool, 4> active) {
  StrategyMask m;
  m.id = id;
  m.scenario = scenario;
  m.active = active;
  for (int i = 0; i < 4; ++i) {
    if (!active[i]) continue;
    if (!m.label.empty()) m.label += " + ";
    m.label += kControlPhrase[i];
  }
  return m;
}

}  // namespace

const std::vector<StrategyMask>& all_strategies() {
  static const std::vector<StrategyMask> list = {
      make(1, 'A', {true, false, false, false}),
      make(2, 'A', {false, true, false, false}),
      make(3, 'A', {false, false, true, false}),
      make(4, 'A', {false, false, false, true}),
      make(5, 'B', {true, true, false, false}),
      make(6, 'B', {true, false, true, false}),
      make(7, 'B', {true, false, false, true}),
      make(8, 'B', {false, true, true, false}),
      make(9, 'B', {false, true, false, true}),
      make(10, 'B', {false, false, true, true}),
      make(11, 'C', {true, true, true, false}),
      make(12, 'C', {true, true, false, true}),
      make(13, 'C', {false, true, true, true}),
      make(14, 'D', {true, true, true, true}),
  };
  return list;
}

const StrategyMask& no_control() {
  static const StrategyMask m = [] {
    StrategyMask base;
    base.label = "no control";
    return base;
  }();
  return m;
}

const StrategyMask& strategy_by_id(int id) {
  if (id < 1 || id > 14)
    throw ConfigError("unknown strategy id " + std::to_string(id) + " (expected 1..14)");
  return all_strategies()[static_cast<size_t>(id - 1)];
}

std::vector<StrategyMask> scenario_strategies(char scenario) {
  if (scenario < 'A' || scenario > 'D')
    throw ConfigError(std::string("unknown scenario '") + scenario + "' (expected A, B, C, or D)");
  std::vector<StrategyMask> out;
  for (const auto& m : all_strategies())
    if (m.scenario == scenario) out.push_back(m);
  return out;
}

ControlVec apply_mask(const StrategyMask& mask, const ControlVec& u) {
  ControlVec out = u;
  for (Eigen::Index i = 0; i < 4; ++i)
    if (!mask.active[static_cast<size_t>(i)]) out[i] = 0.0;
  return out;
}

}  // namespace seiarb::strategies
