// Acceptance checks. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.
#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "seiarb/cea.hpp"
#include "seiarb/config.hpp"
#include "seiarb/io.hpp"
#include "seiarb/metrics.hpp"
#include "seiarb/model.hpp"
#include "seiarb/pmp.hpp"
#include "seiarb/strategies.hpp"
#include "seiarb/sweep.hpp"

using namespace seiarb;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void report(int criterion, const std::string& what, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++g_failures;
}

void note(const std::string& text) { g_notes.push_back(text); }

bool expect(bool ok, const std::string& context) {
  if (!ok) note("  failed: " + context);
  return ok;
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

// A table cell as printed in the reference report. The comparison tolerance
// is half a unit in the last printed digit or in the fourth significant
// figure, whichever is looser (the cells mix 4-5 significant digits with
// fixed 4-decimal rounding).
struct Cell {
  double value = 0.0;
  double tol = 0.0;
};

Cell printed(const std::string& text) {
  Cell c;
  c.value = std::stod(text);
  std::string mantissa = text;
  int exp_shift = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exp_shift = std::stoi(text.substr(e + 1));
  }
  int decimals = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string::npos)
    decimals = static_cast<int>(mantissa.size() - dot - 1);
  const double last_place = 0.5 * std::pow(10.0, exp_shift - decimals);
  const int mag = static_cast<int>(std::floor(std::log10(std::abs(c.value))));
  const double fourth_sig = 0.5 * std::pow(10.0, mag - 3);
  c.tol = std::max(last_place, fourth_sig);
  return c;
}

// ---------------------------------------------------------------- criterion 1

struct RoundExpect {
  // id -> printed ICER; absent value means the entry must be deferred.
  std::vector<std::pair<int, std::optional<Cell>>> ladder;
  int eliminated = 0;
  std::string reason;
};

bool check_report(const cea::CeaReport& rep, const std::map<int, Cell>& iar_cells,
                  const std::map<int, Cell>& acer_cells, const std::vector<RoundExpect>& rounds,
                  int winner, const std::string& tag) {
  bool ok = true;
  for (const cea::CeaRecord& r : rep.records) {
    if (const auto it = iar_cells.find(r.strategy_id); it != iar_cells.end())
      ok &= expect(std::abs(r.iar - it->second.value) <= it->second.tol,
                   tag + " IAR(" + std::to_string(r.strategy_id) + ")");
    if (const auto it = acer_cells.find(r.strategy_id); it != acer_cells.end())
      ok &= expect(std::abs(r.acer - it->second.value) <= it->second.tol,
                   tag + " ACER(" + std::to_string(r.strategy_id) + ")");
  }
  ok &= expect(rep.rounds.size() == rounds.size(), tag + " round count");
  if (rep.rounds.size() != rounds.size()) return false;
  for (size_t r = 0; r < rounds.size(); ++r) {
    const cea::IcerStep& got = rep.rounds[r];
    const RoundExpect& want = rounds[r];
    ok &= expect(got.eliminated_id == want.eliminated,
                 tag + " round " + std::to_string(r + 1) + " elimination");
    if (!want.reason.empty())
      ok &= expect(got.reason == want.reason, tag + " round " + std::to_string(r + 1) + " reason");
    ok &= expect(got.ladder.size() == want.ladder.size(),
                 tag + " round " + std::to_string(r + 1) + " ladder size");
    if (got.ladder.size() != want.ladder.size()) continue;
    for (size_t j = 0; j < want.ladder.size(); ++j) {
      const auto& [id, cell] = want.ladder[j];
      const cea::LadderEntry& entry = got.ladder[j];
      const std::string where =
          tag + " round " + std::to_string(r + 1) + " ICER(" + std::to_string(id) + ")";
      ok &= expect(entry.strategy_id == id, where + " position");
      if (!cell.has_value()) {
        ok &= expect(!entry.icer.has_value(), where + " deferred");
      } else {
        ok &= expect(entry.icer.has_value(), where + " present");
        if (entry.icer)
          ok &= expect(std::abs(*entry.icer - cell->value) <= cell->tol, where + " value");
      }
    }
  }
  ok &= expect(rep.winner == winner, tag + " winner");
  return ok;
}

bool criterion1() {
  using std::nullopt;
  const auto t0 = std::chrono::steady_clock::now();
  const auto records =
      cli::read_records_csv(std::string(SEIARB_DATA_DIR) + "/reference_cea.csv");
  std::map<int, cea::CeaRecord> by_id;
  for (const cea::CeaRecord& r : records) by_id.emplace(r.strategy_id, r);
  const auto pick = [&](std::initializer_list<int> ids) {
    std::vector<cea::CeaRecord> out;
    for (int id : ids) out.push_back(by_id.at(id));
    return out;
  };

  bool ok = true;

  const std::map<int, Cell> iar{
      {1, printed("1.5793")},  {2, printed("1.5835")},  {3, printed("1.2325")},
      {4, printed("1.2914")},  {5, printed("1.5759")},  {6, printed("1.5239")},
      {7, printed("1.4506")},  {8, printed("1.4524")},  {9, printed("1.4077")},
      {10, printed("1.3350")}, {11, printed("1.5641")}, {12, printed("1.4706")},
      {13, printed("1.4022")}, {14, printed("1.4662")}};
  const std::map<int, Cell> acer{
      {1, printed("1.3594e-4")}, {2, printed("8.4784e-4")}, {3, {9.7498e-4, 1e-5}},
      {4, printed("0.0016")},    {5, printed("7.5775e-4")}, {6, printed("6.3834e-4")},
      {7, printed("8.1410e-4")}, {8, printed("0.0015")},    {9, printed("0.0020")},
      {10, printed("0.0021")},   {11, printed("0.0010")},   {12, printed("8.4107e-4")},
      {13, printed("0.0024")},   {14, printed("9.1789e-4")}};

  // Scenario A. The round-1 ICER for strategy 1 is printed as -0.0004 in the
  // reference table, but its own displayed operands give
  // (281.1135 - 2.8098e3) / (2.0679e6 - 1.8e6) = -9.4389e-3; we assert the
  // definition's value and flag the printed cell as a misprint.
  {
    const cea::CeaReport rep = cea::eliminate(pick({1, 2, 3, 4}));
    const std::vector<RoundExpect> rounds{
        {{{3, Cell{9.7498e-4, 1e-5}},
          {2, printed("6.4220e-6")},
          {4, printed("0.0100")},
          {1, Cell{-9.4389193729003361e-3, 1e-12}}},
         4,
         "dominated"},
        {{{3, printed("9.7504e-4")}, {2, printed("6.4220e-6")}, {1, printed("-0.0028")}},
         3,
         "dominated"},
        {{{2, printed("8.4784e-4")}, {1, printed("-0.0028")}}, 2, "dominated"}};
    ok &= check_report(rep, iar, acer, rounds, 1, "scenario A");
    note("  scenario A round-1 ICER(1): asserted definition value "
         "-9.4389e-3 against the misprinted reference cell -0.0004");
  }

  // Scenario B.
  {
    const cea::CeaReport rep = cea::eliminate(pick({5, 6, 7, 8, 9, 10}));
    const std::vector<RoundExpect> rounds{
        {{{8, printed("0.0015")},
          {10, printed("0.0232")},
          {9, printed("5.4400e-4")},
          {6, printed("-0.0631")},
          {7, printed("0.0068")},
          {5, printed("-0.0016")}},
         10,
         "dominated"},
        {{{8, printed("0.0015")},
          {9, printed("0.0094")},
          {6, printed("-0.0631")},
          {7, printed("0.0068")},
          {5, printed("-0.0016")}},
         9,
         "dominated"},
        {{{8, printed("0.0015")},
          {6, printed("-0.0078")},
          {7, printed("0.0068")},
          {5, printed("-0.0016")}},
         7,
         "dominated"},
        {{{8, printed("0.0015")}, {6, printed("-0.0078")}, {5, printed("0.0030")}},
         5,
         "dominated"},
        {{{8, printed("0.0015")}, {6, printed("-0.0078")}}, 8, "dominated"}};
    ok &= check_report(rep, iar, acer, rounds, 6, "scenario B");
  }

  // Scenario C: strategies 11 and 12 tie on effectiveness, so the final
  // removal is by cost minimization rather than an ICER comparison.
  {
    const cea::CeaReport rep = cea::eliminate(pick({11, 12, 13}));
    const std::vector<RoundExpect> rounds{
        {{{13, printed("0.0024")}, {11, printed("-0.0229")}, {12, nullopt}}, 13, "dominated"},
        {{{11, Cell{0.0010089377947451158, 1e-12}}, {12, nullopt}}, 11, "cost-minimization"}};
    ok &= check_report(rep, iar, acer, rounds, 12, "scenario C");
  }

  // Cross-scenario comparison of the four winners.
  {
    const cea::CeaReport rep = cea::cross_scenario_report(pick({1, 6, 12, 14}));
    const std::vector<RoundExpect> rounds{
        {{{1, printed("1.3594e-4")},
          {6, printed("0.0238")},
          {14, printed("0.0061")},
          {12, nullopt}},
         6,
         "dominated"},
        {{{1, printed("1.3594e-4")}, {14, printed("0.0111")}, {12, nullopt}}, 14, "dominated"},
        {{{1, printed("1.3594e-4")}, {12, printed("0.0100")}}, 12, "dominated"}};
    ok &= check_report(rep, iar, acer, rounds, 1, "cross-scenario");
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok &= expect(elapsed < 1.0, "replay runtime < 1 s (got " + std::to_string(elapsed) + ")");
  return ok;
}

// ---------------------------------------------------------------- criterion 2

double r0_ngm(const ModelParams& p) {
  Eigen::Matrix4d F = Eigen::Matrix4d::Zero();
  F.row(0) << p.beta1, p.beta2, p.beta3, p.beta4;
  Eigen::Matrix4d V;
  V << p.k1(), 0, 0, 0,
      -(1.0 - p.tau) * p.delta, p.k2(), 0, 0,
      -p.tau * p.delta, 0, p.k3(), 0,
      -p.psi1, -p.psi2, -p.psi3, p.phi;
  Eigen::EigenSolver<Eigen::Matrix4d> es(F * V.inverse(), false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

bool criterion2() {
  bool ok = expect(rel_diff(compute_r0(ModelParams{}), r0_ngm(ModelParams{})) <= 1e-8,
                   "default parameters");

  std::mt19937 gen(8265321);
  std::uniform_real_distribution<double> beta(1e-4, 1.0);
  std::uniform_real_distribution<double> rate(1e-3, 1.0);
  std::uniform_real_distribution<double> frac(0.01, 0.99);
  std::uniform_real_distribution<double> death(1e-6, 1e-3);
  for (int k = 0; k < 100; ++k) {
    ModelParams p;
    p.beta1 = beta(gen);
    p.beta2 = beta(gen);
    p.beta3 = beta(gen);
    p.beta4 = beta(gen);
    p.delta = rate(gen);
    p.tau = frac(gen);
    p.d = death(gen);
    p.d1 = death(gen) * 100.0;
    p.gamma1 = rate(gen);
    p.gamma2 = rate(gen);
    p.psi1 = rate(gen);
    p.psi2 = rate(gen);
    p.psi3 = rate(gen);
    p.phi = rate(gen);
    p.Lambda = p.d * 1e6;
    validate(p);
    ok &= expect(rel_diff(compute_r0(p), r0_ngm(p)) <= 1e-8,
                 "random draw " + std::to_string(k));
  }
  return ok;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
  const ModelParams p;
  const pmp::ObjectiveWeights w;
  std::mt19937 gen(925);
  std::uniform_real_distribution<double> susceptible(1e4, 1e7);
  std::uniform_real_distribution<double> infected(0.0, 1e5);
  std::uniform_real_distribution<double> recovered(0.0, 1e6);
  std::uniform_real_distribution<double> costate(-10.0, 10.0);
  std::uniform_real_distribution<double> half(0.0, 0.5);

  bool ok = true;
  for (int k = 0; k < 50; ++k) {
    StateVec x;
    x << susceptible(gen), infected(gen), infected(gen), infected(gen), recovered(gen),
        infected(gen);
    pmp::AdjointVec lam;
    for (int i = 0; i < 6; ++i) lam[i] = costate(gen);
    const ControlVec u{half(gen), half(gen), 1.5 * half(gen), 1.5 * half(gen)};

    const pmp::AdjointVec dl = pmp::rhs_adjoint(x, lam, u, w, p);
    for (int i = 0; i < 6; ++i) {
      const double h = std::max(6e-6 * std::abs(x[i]), 0.1);
      const auto at = [&](double step) {
        StateVec y = x;
        y[i] += step;
        return pmp::hamiltonian(y, lam, u, w, p);
      };
      const double fd =
          -(8.0 * (at(h) - at(-h)) - (at(2.0 * h) - at(-2.0 * h))) / (12.0 * h);
      const double denom = std::max({std::abs(dl[i]), std::abs(fd), 1.0});
      ok &= expect(std::abs(dl[i] - fd) / denom <= 1e-6,
                   "point " + std::to_string(k) + " component " + std::to_string(i));
    }
  }
  return ok;
}

// ------------------------------------------------------- criteria 4, 5, and 7

struct Batch {
  pmp::OptimalSolution baseline;
  std::vector<pmp::OptimalSolution> solutions;  // index = strategy id - 1
  std::vector<metrics::OutcomeSummary> summaries;
};

Batch solve_all(const cli::RunConfig& cfg) {
  Batch batch;
  batch.baseline = pmp::fbs_solve(cfg.params, cfg.weights, cfg.initial_state(),
                                  strategies::no_control(), cfg.sweep);
  for (const strategies::StrategyMask& mask : strategies::all_strategies()) {
    batch.solutions.push_back(
        pmp::fbs_solve(cfg.params, cfg.weights, cfg.initial_state(), mask, cfg.sweep));
    batch.summaries.push_back(
        metrics::summarize(batch.solutions.back(), batch.baseline, cfg.params, cfg.weights));
  }
  return batch;
}

bool criterion4(const cli::RunConfig& cfg, const Batch& batch) {
  bool ok = true;
  for (const strategies::StrategyMask& mask : strategies::all_strategies()) {
    const pmp::OptimalSolution& sol = batch.solutions[mask.id - 1];
    ok &= expect(sol.converged, "strategy " + std::to_string(mask.id) + " converged");
    ok &= expect(sol.adjoints.col(sol.adjoints.cols() - 1).isZero(0.0),
                 "strategy " + std::to_string(mask.id) + " terminal adjoint");

    double worst = 0.0;
    bool masked_clean = true;
    for (int j = 0; j < sol.times.size(); ++j) {
      const ControlVec star = strategies::apply_mask(
          mask, pmp::characterize_controls(sol.states.col(j), sol.adjoints.col(j), cfg.weights,
                                           cfg.params, cfg.sweep.u_max));
      for (int i = 0; i < 4; ++i) {
        if (mask.active[i])
          worst = std::max(worst, std::abs(sol.controls(i, j) - star[i]));
        else
          masked_clean = masked_clean && sol.controls(i, j) == 0.0;
      }
    }
    ok &= expect(worst <= 1e-6, "strategy " + std::to_string(mask.id) + " stationarity (max |u - clamp(theta)| = " +
                                    std::to_string(worst) + ")");
    ok &= expect(masked_clean, "strategy " + std::to_string(mask.id) + " masked channels zero");
  }
  return ok;
}

bool criterion5(const Batch& batch) {
  bool ok = true;
  for (size_t i = 0; i < batch.solutions.size(); ++i) {
    ok &= expect(batch.solutions[i].objective <= batch.baseline.objective,
                 "J(strategy " + std::to_string(i + 1) + ") <= J(no control)");
    ok &= expect(batch.summaries[i].infections_averted >= 0.0,
                 "IA(strategy " + std::to_string(i + 1) + ") >= 0");
  }
  const double combined = batch.summaries[13].infections_averted;
  for (int id = 1; id <= 4; ++id)
    ok &= expect(combined >= batch.summaries[id - 1].infections_averted,
                 "IA(strategy 14) >= IA(strategy " + std::to_string(id) + ")");
  return ok;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6(const cli::RunConfig& cfg) {
  const StateVec init = cfg.initial_state();

  const auto terminal = [&](int n) {
    const ControlGrid zero = ControlGrid::Zero(4, n + 1);
    return StateVec(pmp::integrate_forward(cfg.params, init, zero, 120.0).col(n));
  };
  const double e1 = (terminal(300) - terminal(600)).norm();
  const double e2 = (terminal(600) - terminal(1200)).norm();
  const double order = std::log2(e1 / e2);
  bool ok = expect(order >= 3.5, "observed convergence order " + std::to_string(order));

  // Co-integrate N' = Lambda - d N - d1 I through the same RK4 stages and
  // compare against the summed human compartments at every node.
  const auto balance_defect = [&](int n) {
    const double h = 120.0 / n;
    StateVec x = init;
    double n_aug = total_population(init);
    double worst = 0.0;
    const ModelParams& p = cfg.params;
    const auto fN = [&](const StateVec& s, double nn) {
      return p.Lambda - p.d * nn - p.d1 * s[comp::I];
    };
    const ControlVec u = ControlVec::Zero();
    for (int j = 0; j < n; ++j) {
      const StateVec k1 = rhs_controlled(x, u, p);
      const double k1n = fN(x, n_aug);
      const StateVec k2 = rhs_controlled(x + 0.5 * h * k1, u, p);
      const double k2n = fN(x + 0.5 * h * k1, n_aug + 0.5 * h * k1n);
      const StateVec k3 = rhs_controlled(x + 0.5 * h * k2, u, p);
      const double k3n = fN(x + 0.5 * h * k2, n_aug + 0.5 * h * k2n);
      const StateVec k4 = rhs_controlled(x + h * k3, u, p);
      const double k4n = fN(x + h * k3, n_aug + h * k3n);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      n_aug += (h / 6.0) * (k1n + 2.0 * k2n + 2.0 * k3n + k4n);
      worst = std::max(worst, std::abs(n_aug - total_population(x)) / total_population(x));
    }
    return worst;
  };
  const double coarse = balance_defect(600);
  const double fine = balance_defect(1200);
  ok &= expect(coarse <= 1e-8, "population balance defect at h=0.2 (" + std::to_string(coarse) + ")");
  ok &= expect(fine <= 1e-8, "population balance defect at h=0.1 (" + std::to_string(fine) + ")");
  return ok;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7(const cli::RunConfig& cfg, const Batch& batch) {
  bool ok = true;
  const StateVec init = cfg.initial_state();
  for (const strategies::StrategyMask& mask : strategies::all_strategies()) {
    const auto eff = metrics::efficacy_curves(batch.solutions[mask.id - 1], init);
    ok &= expect(eff.col(0).isZero(0.0), "strategy " + std::to_string(mask.id) + " efficacy(0) = 0");
    ok &= expect(eff.maxCoeff() <= 1.0, "strategy " + std::to_string(mask.id) + " efficacy <= 1");
  }

  // Exactness: efficacy reaches 1 exactly where a compartment is exactly 0,
  // and nowhere else.
  pmp::OptimalSolution synthetic;
  const int n = 4;
  synthetic.times = Eigen::VectorXd::LinSpaced(n + 1, 0.0, 1.0);
  synthetic.states = init.replicate(1, n + 1);
  synthetic.adjoints = pmp::AdjointGrid::Zero(6, n + 1);
  synthetic.controls = ControlGrid::Zero(4, n + 1);
  for (int j = 1; j <= n; ++j) {
    synthetic.states(comp::E, j) = j >= 2 ? 0.0 : 1e-9;
    synthetic.states(comp::I, j) = 0.0;
    synthetic.states(comp::A, j) = init[comp::A];
    synthetic.states(comp::B, j) = 0.0;
  }
  const auto eff = metrics::efficacy_curves(synthetic, init);
  ok &= expect(eff(0, 1) != 1.0, "tiny positive compartment stays below 1");
  ok &= expect(eff(0, 2) == 1.0, "extinct compartment maps to exactly 1");
  ok &= expect(eff(1, 1) == 1.0, "exact zero maps to exactly 1");
  ok &= expect(eff(2, n) == 0.0, "constant compartment stays at 0");
  return ok;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const cli::RunConfig cfg = cli::default_config();

  try {
    report(1, "cost-effectiveness replay reproduces the reference tables", criterion1());
    report(2, "closed-form R0 agrees with the next-generation matrix", criterion2());
    report(3, "adjoint system equals -grad_x H by finite differences", criterion3());

    const Batch batch = solve_all(cfg);
    report(4, "converged controls are stationary under the default config", criterion4(cfg, batch));
    report(5, "every strategy improves on no control; combined beats singles", criterion5(batch));
    report(6, "RK4 order >= 3.5 and the population balance identity holds", criterion6(cfg));
    report(7, "efficacy curves obey their boundary semantics", criterion7(cfg, batch));
  } catch (const std::exception& e) {
    std::printf("FAIL unexpected exception: %s\n", e.what());
    ++g_failures;
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("suite runtime: %.2f s (budget 300 s)\n", elapsed);
  if (elapsed >= 300.0) {
    std::printf("FAIL suite exceeded its runtime budget\n");
    ++g_failures;
  }

  for (const std::string& line : g_notes) std::printf("%s\n", line.c_str());
  std::printf(g_failures == 0 ? "all criteria passed\n" : "%d criterion failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
