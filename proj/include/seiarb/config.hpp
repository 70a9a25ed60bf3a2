#pragma once

#include <string>
#include <vector>

#include "seiarb/metrics.hpp"
#include "seiarb/sweep.hpp"

namespace seiarb::cli {

// Full run configuration. Defaults reproduce the reference parameter set;
// every field can be overridden from a config file (key-value or JSON) and
// the selection/output fields additionally from CLI flags.
struct RunConfig {
  ModelParams params;
  pmp::ObjectiveWeights weights;
  pmp::SweepConfig sweep;

  double n0 = 34813871.0;  // initial total human population
  double s0 = -1.0;        // < 0 means "derive as n0 - e0 - i0 - a0 - r0"
  double e0 = 1000.0;
  double i0 = 500.0;
  double a0 = 300.0;
  double r0 = 0.0;
  double b0 = 500.0;

  std::string selection = "all";  // "all", scenario letter, or id list "1,5,14"
  std::string out_dir = "out";
  std::string format = "both";  // csv | json | both

  StateVec initial_state() const;
};

RunConfig default_config();

// Loads a key-value config (sections [params], [init], [weights], [sweep],
// [run]) or, for a .json path, the equivalent JSON document. Unknown keys,
// malformed values, and out-of-range settings raise ConfigError naming the
// offending field. Lambda defaults to d * N0 when absent.
RunConfig load_config(const std::string& path);

// Validates every nested invariant; throws ConfigError.
void validate(const RunConfig& cfg);

// Expands a selection string into strategy ids: "all", "A".."D", or a
// comma-separated id list.
std::vector<int> resolve_selection(const std::string& selection);

}  // namespace seiarb::cli
