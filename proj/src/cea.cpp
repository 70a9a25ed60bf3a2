#include "seiarb/cea.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace seiarb::cea {

namespace {

// Ascending infections averted; equal-IA ties by descending cost, then id.
void sort_records(std::vector<CeaRecord>& records) {
  std::sort(records.begin(), records.end(), [](const CeaRecord& a, const CeaRecord& b) {
    if (a.infections_averted != b.infections_averted)
      return a.infections_averted < b.infections_averted;
    if (a.total_cost != b.total_cost) return a.total_cost > b.total_cost;
    return a.strategy_id < b.strategy_id;
  });
}

}  // namespace

double iar(double infections_averted, double recoveries) {
  if (infections_averted == 0.0) return 0.0;
  if (!(recoveries > 0.0))
    throw NumericError("iar: undefined metric, recoveries must be positive");
  return infections_averted / recoveries;
}

double acer(double total_cost, double infections_averted) {
  if (!(infections_averted > 0.0))
    throw NumericError("acer: undefined metric, infections averted must be positive");
  return total_cost / infections_averted;
}

CeaRecord make_record(int strategy_id, double infections_averted, double total_cost,
                      double recoveries) {
  CeaRecord r;
  r.strategy_id = strategy_id;
  r.infections_averted = infections_averted;
  r.total_cost = total_cost;
  r.recoveries = recoveries;
  r.iar = iar(infections_averted, recoveries);
  r.acer = acer(total_cost, infections_averted);
  return r;
}

IcerStep icer_ladder(const std::vector<CeaRecord>& records) {
  if (records.empty()) throw ConfigError("icer_ladder: at least one record required");
  std::vector<CeaRecord> sorted = records;
  sort_records(sorted);

  IcerStep step;
  step.ladder.reserve(sorted.size());
  // Origin baseline: zero cost, zero infections averted.
  double base_ia = 0.0;
  double base_cost = 0.0;
  bool in_tie_with_base = false;
  for (const CeaRecord& rec : sorted) {
    LadderEntry entry;
    entry.strategy_id = rec.strategy_id;
    entry.infections_averted = rec.infections_averted;
    entry.total_cost = rec.total_cost;
    if (!step.ladder.empty() && rec.infections_averted == step.ladder.back().infections_averted) {
      // Equal-IA tie: not ICER-compared, resolved by cost minimization.
      in_tie_with_base = true;
    } else {
      if (!in_tie_with_base && !step.ladder.empty()) {
        base_ia = step.ladder.back().infections_averted;
        base_cost = step.ladder.back().total_cost;
      } else if (in_tie_with_base) {
        // Baseline stays on the tie-group head, which holds the last icer.
        for (auto it = step.ladder.rbegin(); it != step.ladder.rend(); ++it) {
          if (it->icer) {
            base_ia = it->infections_averted;
            base_cost = it->total_cost;
            break;
          }
        }
        in_tie_with_base = false;
      }
      entry.icer = (rec.total_cost - base_cost) / (rec.infections_averted - base_ia);
    }
    step.ladder.push_back(entry);
  }
  return step;
}

namespace {

CeaReport run_elimination(std::vector<CeaRecord> records) {
  if (records.size() < 2) throw ConfigError("eliminate: at least two records required");
  sort_records(records);

  CeaReport report;
  report.records = records;

  report.iar_ranking.reserve(records.size());
  report.acer_ranking.reserve(records.size());
  std::vector<CeaRecord> by_iar = records;
  std::sort(by_iar.begin(), by_iar.end(), [](const CeaRecord& a, const CeaRecord& b) {
    if (a.iar != b.iar) return a.iar > b.iar;
    return a.strategy_id < b.strategy_id;
  });
  for (const auto& r : by_iar) report.iar_ranking.push_back(r.strategy_id);
  std::vector<CeaRecord> by_acer = records;
  std::sort(by_acer.begin(), by_acer.end(), [](const CeaRecord& a, const CeaRecord& b) {
    if (a.acer != b.acer) return a.acer < b.acer;
    return a.strategy_id < b.strategy_id;
  });
  for (const auto& r : by_acer) report.acer_ranking.push_back(r.strategy_id);

  std::vector<CeaRecord> survivors = std::move(records);
  while (survivors.size() > 1) {
    IcerStep step = icer_ladder(survivors);
    int victim = 0;
    // Count ICER-compared entries; a single one means every survivor ties
    // on infections averted and the ladder degenerates to cost comparison.
    const LadderEntry* worst = nullptr;
    for (const LadderEntry& e : step.ladder)
      if (e.icer && (!worst || *e.icer > *worst->icer)) worst = &e;
    long compared = std::count_if(step.ladder.begin(), step.ladder.end(),
                                  [](const LadderEntry& e) { return e.icer.has_value(); });
    if (compared >= 2) {
      victim = worst->strategy_id;
      step.reason = "dominated";
    } else {
      const LadderEntry* costliest = &step.ladder.front();
      for (const LadderEntry& e : step.ladder)
        if (e.total_cost > costliest->total_cost) costliest = &e;
      victim = costliest->strategy_id;
      step.reason = "cost-minimization";
    }
    step.eliminated_id = victim;
    report.rounds.push_back(std::move(step));
    survivors.erase(std::find_if(survivors.begin(), survivors.end(),
                                 [victim](const CeaRecord& r) { return r.strategy_id == victim; }));
  }
  report.winner = survivors.front().strategy_id;
  return report;
}

}  // namespace

CeaReport eliminate(std::vector<CeaRecord> records) { return run_elimination(std::move(records)); }

CeaReport cross_scenario_report(const std::vector<CeaRecord>& winners) {
  return run_elimination(winners);
}

}  // namespace seiarb::cea
