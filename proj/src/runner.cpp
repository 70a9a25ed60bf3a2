#include "seiarb/runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "seiarb/cea.hpp"
#include "seiarb/errors.hpp"
#include "seiarb/io.hpp"
#include "seiarb/metrics.hpp"
#include "seiarb/model.hpp"
#include "seiarb/strategies.hpp"
#include "seiarb/sweep.hpp"

namespace seiarb::cli {
namespace {

namespace fs = std::filesystem;

// Display tables round to 5 significant figures; file output keeps 10.
std::string fmt5(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.5g", v);
  return buf;
}

std::string strategy_dir(int id) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "strategy_%02d", id);
  return buf;
}

cea::CeaReport trivial_report(const cea::CeaRecord& rec) {
  cea::CeaReport rep;
  rep.records = {rec};
  rep.iar_ranking = {rec.strategy_id};
  rep.acer_ranking = {rec.strategy_id};
  rep.winner = rec.strategy_id;
  return rep;
}

void print_report(const cea::CeaReport& rep, const std::string& title, std::ostream& out) {
  out << title << "\n";
  out << "  strategy            IA          cost           IAR          ACER\n";
  for (const cea::CeaRecord& r : rep.records) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %8d  %12.5g  %12.5g  %12.5g  %12.5g\n", r.strategy_id,
                  r.infections_averted, r.total_cost, r.iar, r.acer);
    out << line;
  }
  int round_no = 1;
  for (const cea::IcerStep& step : rep.rounds) {
    out << "  round " << round_no++ << ":";
    for (const cea::LadderEntry& e : step.ladder) {
      out << "  ICER(" << e.strategy_id << ")=" << (e.icer ? fmt5(*e.icer) : "deferred");
    }
    out << "  => remove " << step.eliminated_id << " (" << step.reason << ")\n";
  }
  out << "  winner: strategy " << rep.winner << "\n";
}

// Groups records by scenario, runs the elimination per group, writes the
// report files, and adds the cross-scenario comparison once every scenario
// has produced a winner.
void emit_cea(const std::vector<cea::CeaRecord>& records, const fs::path& out_dir,
              const std::string& format, std::ostream& out) {
  const bool want_csv = format != "json";
  const bool want_json = format != "csv";

  std::map<char, std::vector<cea::CeaRecord>> groups;
  for (const cea::CeaRecord& r : records)
    groups[strategies::strategy_by_id(r.strategy_id).scenario].push_back(r);

  std::map<char, cea::CeaRecord> winners;
  for (const auto& [scenario, recs] : groups) {
    cea::CeaReport rep = recs.size() == 1 ? trivial_report(recs.front()) : cea::eliminate(recs);
    for (const cea::CeaRecord& r : recs)
      if (r.strategy_id == rep.winner) winners.emplace(scenario, r);
    const std::string stem = std::string("cea_") + scenario;
    if (want_json) write_cea_json((out_dir / (stem + ".json")).string(), rep);
    if (want_csv) write_cea_csv((out_dir / (stem + ".csv")).string(), rep);
    print_report(rep, std::string("scenario ") + scenario, out);
  }

  if (winners.size() == 4) {
    std::vector<cea::CeaRecord> finalists;
    for (const auto& [scenario, rec] : winners) finalists.push_back(rec);
    cea::CeaReport overall = cea::cross_scenario_report(finalists);
    if (want_json) write_cea_json((out_dir / "cea_overall.json").string(), overall);
    if (want_csv) write_cea_csv((out_dir / "cea_overall.csv").string(), overall);
    print_report(overall, "cross-scenario", out);
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  const std::vector<int> ids = resolve_selection(cfg.selection);
  const fs::path out_dir = cfg.out_dir;
  fs::create_directories(out_dir);
  const StateVec init = cfg.initial_state();
  const bool want_csv = cfg.format != "json";
  const bool want_json = cfg.format != "csv";

  const pmp::OptimalSolution baseline =
      pmp::fbs_solve(cfg.params, cfg.weights, init, strategies::no_control(), cfg.sweep);
  {
    const fs::path dir = out_dir / "baseline";
    fs::create_directories(dir);
    if (want_csv) write_trajectory_csv((dir / "trajectory.csv").string(), baseline);
    if (want_json) {
      const metrics::OutcomeSummary s = metrics::summarize(baseline, baseline, cfg.params, cfg.weights);
      write_summary_json((dir / "summary.json").string(), s, strategies::no_control(), baseline);
    }
  }

  bool all_converged = baseline.converged;
  std::vector<cea::CeaRecord> records;
  for (int id : ids) {
    const strategies::StrategyMask mask = strategies::strategy_by_id(id);
    const pmp::OptimalSolution sol = pmp::fbs_solve(cfg.params, cfg.weights, init, mask, cfg.sweep);
    const metrics::OutcomeSummary s = metrics::summarize(sol, baseline, cfg.params, cfg.weights);

    const fs::path dir = out_dir / strategy_dir(id);
    fs::create_directories(dir);
    if (want_csv) {
      write_trajectory_csv((dir / "trajectory.csv").string(), sol);
      write_controls_csv((dir / "controls.csv").string(), sol);
      write_efficacy_csv((dir / "efficacy.csv").string(), sol.times,
                         metrics::efficacy_curves(sol, init));
    }
    if (want_json) write_summary_json((dir / "summary.json").string(), s, mask, sol);

    out << strategy_dir(id) << " [" << mask.label << "]: "
        << (sol.converged ? "converged" : "NOT CONVERGED") << " after " << sol.iterations
        << " iterations, J=" << fmt5(sol.objective) << ", IA=" << fmt5(s.infections_averted)
        << ", cost=" << fmt5(s.total_cost) << "\n";
    if (!sol.converged)
      out << "  warning: final control change " << fmt5(sol.final_change)
          << " still above tolerance " << fmt5(cfg.sweep.tol) << "\n";

    all_converged = all_converged && sol.converged;
    if (ids.size() >= 2)
      records.push_back(cea::make_record(id, s.infections_averted, s.total_cost, s.recoveries));
  }

  if (records.size() >= 2) emit_cea(records, out_dir, cfg.format, out);
  return all_converged ? kExitOk : kExitNotConverged;
}

int replay_cea(const std::string& records_path, const RunConfig& cfg, std::ostream& out) {
  const std::vector<cea::CeaRecord> records = read_records_csv(records_path);
  const fs::path out_dir = cfg.out_dir;
  fs::create_directories(out_dir);
  emit_cea(records, out_dir, cfg.format, out);
  return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SEIARB optimal-control solver and cost-effectiveness analyzer"};
  app.require_subcommand(1);

  std::string config_path;
  std::string strategy_sel;
  std::string scenario_sel;
  std::string replay_path;
  std::string replay_pos;
  std::string out_dir;
  std::string format;

  CLI::App* run_cmd = app.add_subcommand("run", "Solve selected strategies and write artifacts");
  run_cmd->add_option("--config", config_path, "Config file (key-value or JSON)");
  CLI::Option* strat_opt =
      run_cmd->add_option("--strategy", strategy_sel, "Strategy ids, comma-separated (1-14)");
  run_cmd->add_option("--scenario", scenario_sel, "Scenario letter A-D, or 'all'")
      ->excludes(strat_opt);
  run_cmd->add_option("--replay", replay_path, "Replay a records CSV instead of solving");
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_option("--format", format, "Output format: csv, json, or both");

  CLI::App* replay_cmd = app.add_subcommand("replay", "Replay a records CSV through the CEA engine");
  replay_cmd->add_option("records", replay_pos, "Records CSV path")->required();
  replay_cmd->add_option("--config", config_path, "Config file (key-value or JSON)");
  replay_cmd->add_option("--out", out_dir, "Output directory");
  replay_cmd->add_option("--format", format, "Output format: csv, json, or both");

  CLI::App* validate_cmd = app.add_subcommand("validate-config", "Parse and validate a config file");
  validate_cmd->add_option("--config", config_path, "Config file (key-value or JSON)")->required();

  CLI::App* r0_cmd = app.add_subcommand("print-r0", "Print the basic reproduction number");
  r0_cmd->add_option("--config", config_path, "Config file (key-value or JSON)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    RunConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!format.empty()) cfg.format = format;

    if (app.got_subcommand(run_cmd)) {
      if (!strategy_sel.empty()) cfg.selection = strategy_sel;
      if (!scenario_sel.empty()) cfg.selection = scenario_sel;
      validate(cfg);
      if (!replay_path.empty()) return replay_cea(replay_path, cfg, out);
      return run(cfg, out);
    }
    if (app.got_subcommand(replay_cmd)) {
      validate(cfg);
      return replay_cea(replay_pos, cfg, out);
    }
    if (app.got_subcommand(validate_cmd)) {
      out << "config OK: " << config_path << "\n";
      return kExitOk;
    }
    if (app.got_subcommand(r0_cmd)) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.9e", compute_r0(cfg.params));
      out << "R0 = " << buf << "\n";
      return kExitOk;
    }
    err << "error: no subcommand selected\n";
    return kExitConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumericError;
  }
}

}  // namespace seiarb::cli
