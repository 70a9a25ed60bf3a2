#pragma once

#include <string>
#include <vector>

#include "seiarb/cea.hpp"
#include "seiarb/metrics.hpp"
#include "seiarb/strategies.hpp"
#include "seiarb/sweep.hpp"

namespace seiarb::cli {

// All CSV output: comma-separated, header row, UTF-8, LF line endings,
// floats as scientific notation with 10 significant digits.

void write_trajectory_csv(const std::string& path, const pmp::OptimalSolution& sol);

void write_controls_csv(const std::string& path, const pmp::OptimalSolution& sol);

void write_efficacy_csv(const std::string& path, const Eigen::VectorXd& times,
                        const Eigen::Matrix<double, 4, Eigen::Dynamic>& eff);

void write_summary_json(const std::string& path, const metrics::OutcomeSummary& summary,
                        const strategies::StrategyMask& mask, const pmp::OptimalSolution& sol);

// Reads back the outcome fields written by write_summary_json.
metrics::OutcomeSummary read_summary_json(const std::string& path);

void write_cea_json(const std::string& path, const cea::CeaReport& report);

void write_cea_csv(const std::string& path, const cea::CeaReport& report);

// CSV with header strategy_id,infections_averted,cost,recoveries.
// Malformed content raises ConfigError with the offending line number.
std::vector<cea::CeaRecord> read_records_csv(const std::string& path);

}  // namespace seiarb::cli
