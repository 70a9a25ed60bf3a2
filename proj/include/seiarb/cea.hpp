#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seiarb/errors.hpp"

namespace seiarb::cea {

struct CeaRecord {
  int strategy_id = 0;
  double infections_averted = 0.0;
  double total_cost = 0.0;
  double recoveries = 0.0;
  double iar = 0.0;
  double acer = 0.0;
};

// infections averted / recoveries. Zero infections averted yield 0
// regardless of recoveries; otherwise recoveries must be positive.
double iar(double infections_averted, double recoveries);

// total cost / infections averted; infections averted must be positive.
double acer(double total_cost, double infections_averted);

// Fills the derived iar/acer fields.
CeaRecord make_record(int strategy_id, double infections_averted, double total_cost,
                      double recoveries);

// One ladder row. A missing icer marks a deferred equal-IA tie entry
// (not ICER-compared; resolved later by cost minimization).
struct LadderEntry {
  int strategy_id = 0;
  double infections_averted = 0.0;
  double total_cost = 0.0;
  std::optional<double> icer;
};

// One elimination round: the survivors' ladder in ascending
// infections-averted order plus the strategy removed this round.
struct IcerStep {
  std::vector<LadderEntry> ladder;
  int eliminated_id = 0;  // 0 when the step only reports a ladder
  std::string reason;     // "dominated" or "cost-minimization"
};

struct CeaReport {
  std::vector<CeaRecord> records;    // input records, ascending IA order
  std::vector<IcerStep> rounds;      // every elimination round
  int winner = 0;
  std::vector<int> iar_ranking;      // best (highest IAR) first
  std::vector<int> acer_ranking;     // best (lowest ACER) first
};

// Builds one ICER ladder over the given records: first entry compared
// against the do-nothing origin (icer = cost/IA), each later entry against
// the immediately preceding non-deferred entry (delta cost / delta IA).
// Records sharing an IA value form a tie group ordered by descending cost;
// only the group head receives an icer, the rest are deferred.
IcerStep icer_ladder(const std::vector<CeaRecord>& records);

// Iterative dominance elimination: per round, rebuild the ladder and remove
// the strategy with the largest icer ("dominated"); once every survivor
// ties on infections averted, remove the costliest ("cost-minimization").
// Requires >= 2 records; input order is irrelevant.
CeaReport eliminate(std::vector<CeaRecord> records);

// Head-to-head comparison of per-scenario winners; same procedure.
CeaReport cross_scenario_report(const std::vector<CeaRecord>& winners);

}  // namespace seiarb::cea
