#include "seiarb/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seiarb/strategies.hpp"

namespace seiarb::cli {

StateVec RunConfig::initial_state() const {
  StateVec x;
  x[comp::S] = s0 >= 0.0 ? s0 : n0 - e0 - i0 - a0 - r0;
  x[comp::E] = e0;
  x[comp::I] = i0;
  x[comp::A] = a0;
  x[comp::R] = r0;
  x[comp::B] = b0;
  return x;
}

RunConfig default_config() { return RunConfig{}; }

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& where) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": cannot parse number from '" + value + "'");
  }
}

int parse_int(const std::string& value, const std::string& where) {
  const double v = parse_double(value, where);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ConfigError(where + ": expected an integer, got '" + value + "'");
  return static_cast<int>(v);
}

struct LoadState {
  RunConfig cfg;
  bool lambda_set = false;
  bool s0_set = false;
};

void assign(LoadState& st, const std::string& section, const std::string& key,
            const std::string& value, const std::string& where) {
  RunConfig& c = st.cfg;
  auto num = [&] { return parse_double(value, where); };
  if (section == "params") {
    if (key == "Lambda") {
      c.params.Lambda = num();
      st.lambda_set = true;
    } else if (key == "d") c.params.d = num();
    else if (key == "beta1") c.params.beta1 = num();
    else if (key == "beta2") c.params.beta2 = num();
    else if (key == "beta3") c.params.beta3 = num();
    else if (key == "beta4") c.params.beta4 = num();
    else if (key == "delta") c.params.delta = num();
    else if (key == "tau") c.params.tau = num();
    else if (key == "d1") c.params.d1 = num();
    else if (key == "gamma1") c.params.gamma1 = num();
    else if (key == "gamma2") c.params.gamma2 = num();
    else if (key == "psi1") c.params.psi1 = num();
    else if (key == "psi2") c.params.psi2 = num();
    else if (key == "psi3") c.params.psi3 = num();
    else if (key == "phi") c.params.phi = num();
    else throw ConfigError(where + ": unknown key '" + key + "' in [params]");
  } else if (section == "init") {
    if (key == "N0") c.n0 = num();
    else if (key == "S0") {
      c.s0 = num();
      st.s0_set = true;
    } else if (key == "E0") c.e0 = num();
    else if (key == "I0") c.i0 = num();
    else if (key == "A0") c.a0 = num();
    else if (key == "R0") c.r0 = num();
    else if (key == "B0") c.b0 = num();
    else throw ConfigError(where + ": unknown key '" + key + "' in [init]");
  } else if (section == "weights") {
    if (key == "A1") c.weights.A1 = num();
    else if (key == "A2") c.weights.A2 = num();
    else if (key == "A3") c.weights.A3 = num();
    else if (key == "A4") c.weights.A4 = num();
    else if (key == "D1") c.weights.D1 = num();
    else if (key == "D2") c.weights.D2 = num();
    else if (key == "D3") c.weights.D3 = num();
    else if (key == "D4") c.weights.D4 = num();
    else throw ConfigError(where + ": unknown key '" + key + "' in [weights]");
  } else if (section == "sweep") {
    if (key == "t_final") c.sweep.t_final = num();
    else if (key == "n_steps") c.sweep.n_steps = parse_int(value, where);
    else if (key == "relaxation") c.sweep.relaxation = num();
    else if (key == "tol") c.sweep.tol = num();
    else if (key == "max_iters") c.sweep.max_iters = parse_int(value, where);
    else if (key == "u1_max") c.sweep.u_max[ctrl::u1] = num();
    else if (key == "u2_max") c.sweep.u_max[ctrl::u2] = num();
    else if (key == "u3_max") c.sweep.u_max[ctrl::u3] = num();
    else if (key == "u4_max") c.sweep.u_max[ctrl::u4] = num();
    else throw ConfigError(where + ": unknown key '" + key + "' in [sweep]");
  } else if (section == "run") {
    if (key == "strategies") c.selection = value;
    else if (key == "out") c.out_dir = value;
    else if (key == "format") c.format = value;
    else throw ConfigError(where + ": unknown key '" + key + "' in [run]");
  } else {
    throw ConfigError(where + ": unknown section [" + section + "]");
  }
}

LoadState load_keyvalue(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  LoadState st;
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = path + ":" + std::to_string(lineno);
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError(where + ": malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const size_t eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section.empty()) throw ConfigError(where + ": key outside any [section]");
    if (key.empty() || value.empty()) throw ConfigError(where + ": empty key or value");
    assign(st, section, key, value, where);
  }
  return st;
}

LoadState load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(path + ": top-level JSON value must be an object");
  LoadState st;
  for (const auto& [section, body] : doc.items()) {
    if (!body.is_object())
      throw ConfigError(path + ": section '" + section + "' must be an object");
    for (const auto& [key, value] : body.items()) {
      const std::string where = path + ": " + section + "." + key;
      std::string token;
      if (value.is_string()) token = value.get<std::string>();
      else if (value.is_number()) token = value.dump();
      else throw ConfigError(where + ": expected a number or string");
      assign(st, section, key, token, where);
    }
  }
  return st;
}

}  // namespace

RunConfig load_config(const std::string& path) {
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  LoadState st = json ? load_json(path) : load_keyvalue(path);
  if (!st.lambda_set) st.cfg.params.Lambda = st.cfg.params.d * st.cfg.n0;
  validate(st.cfg);
  return st.cfg;
}

void validate(const RunConfig& cfg) {
  seiarb::validate(cfg.params);
  pmp::validate(cfg.weights);
  pmp::validate(cfg.sweep);

  std::ostringstream bad;
  if (!(cfg.n0 > 0.0)) bad << "N0 must be > 0; ";
  const double seeds[] = {cfg.e0, cfg.i0, cfg.a0, cfg.r0, cfg.b0};
  const char* names[] = {"E0", "I0", "A0", "R0", "B0"};
  for (int i = 0; i < 5; ++i)
    if (!(seeds[i] >= 0.0) || !std::isfinite(seeds[i])) bad << names[i] << " must be >= 0; ";
  const StateVec x0 = cfg.initial_state();
  if (!(x0[comp::S] >= 0.0)) bad << "derived S0 is negative (seeds exceed N0); ";
  if (!(total_population(x0) > 0.0)) bad << "initial population must be positive; ";
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "both")
    bad << "format must be csv, json, or both; ";
  const std::string msg = bad.str();
  if (!msg.empty()) throw ConfigError("invalid run config: " + msg);

  resolve_selection(cfg.selection);
}

std::vector<int> resolve_selection(const std::string& selection) {
  const std::string sel = trim(selection);
  if (sel.empty()) throw ConfigError("empty strategy selection");
  if (sel == "all") {
    std::vector<int> ids;
    for (const auto& m : strategies::all_strategies()) ids.push_back(m.id);
    return ids;
  }
  if (sel.size() == 1 && sel[0] >= 'A' && sel[0] <= 'D') {
    std::vector<int> ids;
    for (const auto& m : strategies::scenario_strategies(sel[0])) ids.push_back(m.id);
    return ids;
  }
  std::vector<int> ids;
  std::stringstream ss(sel);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) throw ConfigError("malformed strategy selection '" + selection + "'");
    ids.push_back(strategies::strategy_by_id(parse_int(t, "strategy selection")).id);
  }
  if (ids.empty()) throw ConfigError("empty strategy selection");
  return ids;
}

}  // namespace seiarb::cli
