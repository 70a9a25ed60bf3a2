#include "seiarb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace seiarb::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9e", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw ConfigError("cannot open output file: " + path);
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

void write_trajectory_csv(const std::string& path, const pmp::OptimalSolution& sol) {
  auto out = open_out(path);
  out << "t,S,E,I,A,R,B\n";
  for (Eigen::Index j = 0; j < sol.times.size(); ++j) {
    out << fmt(sol.times[j]);
    for (Eigen::Index i = 0; i < 6; ++i) out << ',' << fmt(sol.states(i, j));
    out << '\n';
  }
}

void write_controls_csv(const std::string& path, const pmp::OptimalSolution& sol) {
  auto out = open_out(path);
  out << "t,u1,u2,u3,u4\n";
  for (Eigen::Index j = 0; j < sol.times.size(); ++j) {
    out << fmt(sol.times[j]);
    for (Eigen::Index i = 0; i < 4; ++i) out << ',' << fmt(sol.controls(i, j));
    out << '\n';
  }
}

void write_efficacy_csv(const std::string& path, const Eigen::VectorXd& times,
                        const Eigen::Matrix<double, 4, Eigen::Dynamic>& eff) {
  auto out = open_out(path);
  out << "t,E_E,E_I,E_A,E_B\n";
  for (Eigen::Index j = 0; j < times.size(); ++j) {
    out << fmt(times[j]);
    for (Eigen::Index i = 0; i < 4; ++i) out << ',' << fmt(eff(i, j));
    out << '\n';
  }
}

void write_summary_json(const std::string& path, const metrics::OutcomeSummary& summary,
                        const strategies::StrategyMask& mask, const pmp::OptimalSolution& sol) {
  nlohmann::ordered_json doc;
  doc["strategy_id"] = mask.id;
  doc["scenario"] = std::string(1, mask.scenario);
  doc["label"] = mask.label;
  doc["converged"] = sol.converged;
  doc["iterations"] = sol.iterations;
  doc["final_change"] = sol.final_change;
  doc["infections_averted"] = summary.infections_averted;
  doc["total_cost"] = summary.total_cost;
  doc["recoveries"] = summary.recoveries;
  doc["objective_J"] = summary.objective_J;
  doc["peak_I"] = summary.peak_I;
  if (summary.time_to_efficacy_1)
    doc["time_to_efficacy_1"] = *summary.time_to_efficacy_1;
  else
    doc["time_to_efficacy_1"] = nullptr;
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

metrics::OutcomeSummary read_summary_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open summary file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  metrics::OutcomeSummary s;
  try {
    s.infections_averted = doc.at("infections_averted").get<double>();
    s.total_cost = doc.at("total_cost").get<double>();
    s.recoveries = doc.at("recoveries").get<double>();
    s.objective_J = doc.at("objective_J").get<double>();
    s.peak_I = doc.at("peak_I").get<double>();
    if (!doc.at("time_to_efficacy_1").is_null())
      s.time_to_efficacy_1 = doc.at("time_to_efficacy_1").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": missing or malformed summary field: " + e.what());
  }
  return s;
}

namespace {

nlohmann::ordered_json record_json(const cea::CeaRecord& r) {
  nlohmann::ordered_json j;
  j["strategy_id"] = r.strategy_id;
  j["infections_averted"] = r.infections_averted;
  j["total_cost"] = r.total_cost;
  j["recoveries"] = r.recoveries;
  j["iar"] = r.iar;
  j["acer"] = r.acer;
  return j;
}

}  // namespace

void write_cea_json(const std::string& path, const cea::CeaReport& report) {
  nlohmann::ordered_json doc;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) doc["records"].push_back(record_json(r));
  doc["iar_ranking"] = report.iar_ranking;
  doc["acer_ranking"] = report.acer_ranking;
  doc["rounds"] = nlohmann::ordered_json::array();
  for (const auto& round : report.rounds) {
    nlohmann::ordered_json rj;
    rj["ladder"] = nlohmann::ordered_json::array();
    for (const auto& e : round.ladder) {
      nlohmann::ordered_json ej;
      ej["strategy_id"] = e.strategy_id;
      ej["infections_averted"] = e.infections_averted;
      ej["total_cost"] = e.total_cost;
      if (e.icer)
        ej["icer"] = *e.icer;
      else
        ej["icer"] = nullptr;
      rj["ladder"].push_back(ej);
    }
    rj["eliminated"] = round.eliminated_id;
    rj["reason"] = round.reason;
    doc["rounds"].push_back(rj);
  }
  doc["winner"] = report.winner;
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

void write_cea_csv(const std::string& path, const cea::CeaReport& report) {
  auto out = open_out(path);
  out << "round,strategy_id,infections_averted,cost,iar,acer,icer,eliminated,reason\n";
  for (size_t k = 0; k < report.rounds.size(); ++k) {
    const auto& round = report.rounds[k];
    for (const auto& e : round.ladder) {
      const cea::CeaRecord* rec = nullptr;
      for (const auto& r : report.records)
        if (r.strategy_id == e.strategy_id) rec = &r;
      out << (k + 1) << ',' << e.strategy_id << ',' << fmt(e.infections_averted) << ','
          << fmt(e.total_cost) << ',' << fmt(rec->iar) << ',' << fmt(rec->acer) << ','
          << (e.icer ? fmt(*e.icer) : std::string()) << ','
          << (round.eliminated_id == e.strategy_id ? 1 : 0) << ','
          << (round.eliminated_id == e.strategy_id ? round.reason : std::string()) << '\n';
    }
  }
  out << "winner," << report.winner << ",,,,,,,\n";
}

std::vector<cea::CeaRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open records file: " + path);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ConfigError(path + ": empty records file");
  ++lineno;
  if (trim(line) != "strategy_id,infections_averted,cost,recoveries")
    throw ConfigError(path + ":1: expected header strategy_id,infections_averted,cost,recoveries");

  std::vector<cea::CeaRecord> records;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto fields = split_csv(line);
    if (fields.size() != 4)
      throw ConfigError(where + ": expected 4 fields, got " + std::to_string(fields.size()));
    try {
      size_t pos = 0;
      const int id = std::stoi(fields[0], &pos);
      if (pos != fields[0].size()) throw std::invalid_argument("trailing characters");
      const double ia = std::stod(fields[1]);
      const double cost = std::stod(fields[2]);
      const double rec = std::stod(fields[3]);
      records.push_back(cea::make_record(id, ia, cost, rec));
    } catch (const NumericError& e) {
      throw ConfigError(where + ": " + e.what());
    } catch (const std::exception&) {
      throw ConfigError(where + ": malformed row '" + trim(line) + "'");
    }
  }
  if (records.empty()) throw ConfigError(path + ": no records");
  return records;
}

}  // namespace seiarb::cli
