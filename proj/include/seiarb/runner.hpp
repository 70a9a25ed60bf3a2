#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seiarb/config.hpp"

namespace seiarb::cli {

// Exit codes shared by the library entry points and the CLI binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitNumericError = 2;
inline constexpr int kExitNotConverged = 3;

// Solves every selected strategy against the zero-control baseline, writes
// per-strategy artifacts (trajectory/controls/efficacy CSVs + summary JSON)
// and CEA reports for each covered scenario (plus the cross-scenario
// comparison when all four scenario winners are available). Returns
// kExitNotConverged when any sweep hit max_iters, else kExitOk.
int run(const RunConfig& cfg, std::ostream& out);

// Replays a records CSV through the CEA engine without solving anything.
int replay_cea(const std::string& records_path, const RunConfig& cfg, std::ostream& out);

// argv-level entry point (program name excluded). Maps ConfigError to 1 and
// NumericError to 2; never throws.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seiarb::cli
