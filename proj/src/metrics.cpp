#include "seiarb/metrics.hpp"

#include <cmath>
#include <string>

namespace seiarb::metrics {

namespace {

// Trapezoid over the solution grid of a per-node integrand.
template <typename F>
double trapezoid(const pmp::OptimalSolution& sol, F&& integrand) {
  const Eigen::Index n = sol.times.size() - 1;
  double sum = 0.0;
  double prev = integrand(Eigen::Index{0});
  for (Eigen::Index j = 1; j <= n; ++j) {
    const double cur = integrand(j);
    sum += 0.5 * (sol.times[j] - sol.times[j - 1]) * (prev + cur);
    prev = cur;
  }
  return sum;
}

}  // namespace

double control_cost(const pmp::OptimalSolution& sol, const pmp::ObjectiveWeights& w) {
  return trapezoid(sol, [&](Eigen::Index j) {
    const ControlVec u = sol.controls.col(j);
    return 0.5 * (w.D1 * u[ctrl::u1] * u[ctrl::u1] + w.D2 * u[ctrl::u2] * u[ctrl::u2] +
                  w.D3 * u[ctrl::u3] * u[ctrl::u3] + w.D4 * u[ctrl::u4] * u[ctrl::u4]);
  });
}

double cumulative_infections(const pmp::OptimalSolution& sol, const ModelParams& p) {
  return trapezoid(sol, [&](Eigen::Index j) {
    const StateVec x = sol.states.col(j);
    const ControlVec u = sol.controls.col(j);
    const double n = total_population(x);
    if (!(n > 0.0))
      throw NumericError("cumulative_infections: total population is not positive at node " +
                         std::to_string(j));
    const double direct = p.beta1 * x[comp::E] + p.beta2 * x[comp::I] + p.beta3 * x[comp::A];
    return (1.0 - u[ctrl::u1]) * direct * x[comp::S] / n +
           (1.0 - u[ctrl::u1] - u[ctrl::u2]) * p.beta4 * x[comp::B] * x[comp::S] / n;
  });
}

double cumulative_recoveries(const pmp::OptimalSolution& sol, const ModelParams& p) {
  return trapezoid(sol, [&](Eigen::Index j) {
    return p.gamma1 * sol.states(comp::I, j) + p.gamma2 * sol.states(comp::A, j);
  });
}

Eigen::Matrix<double, 4, Eigen::Dynamic> efficacy_curves(const pmp::OptimalSolution& sol,
                                                         const StateVec& init) {
  constexpr Eigen::Index tracked[4] = {comp::E, comp::I, comp::A, comp::B};
  constexpr const char* names[4] = {"E", "I", "A", "B"};
  for (int i = 0; i < 4; ++i)
    if (!(init[tracked[i]] > 0.0))
      throw NumericError(std::string("efficacy_curves: initial compartment ") + names[i] +
                         " must be positive");
  Eigen::Matrix<double, 4, Eigen::Dynamic> eff(4, sol.times.size());
  for (int i = 0; i < 4; ++i) {
    const double x0 = init[tracked[i]];
    eff.row(i) = (x0 - sol.states.row(tracked[i]).array()) / x0;
  }
  return eff;
}

OutcomeSummary summarize(const pmp::OptimalSolution& sol, const pmp::OptimalSolution& baseline,
                         const ModelParams& p, const pmp::ObjectiveWeights& w) {
  if (sol.times.size() != baseline.times.size() || !sol.times.isApprox(baseline.times))
    throw ConfigError("summarize: solution and baseline grids do not match");

  OutcomeSummary out;
  out.infections_averted = cumulative_infections(baseline, p) - cumulative_infections(sol, p);
  out.total_cost = control_cost(sol, w);
  out.recoveries = cumulative_recoveries(sol, p);
  out.objective_J = sol.objective;
  out.peak_I = sol.states.row(comp::I).maxCoeff();

  const auto eff = efficacy_curves(sol, baseline.states.col(0));
  for (Eigen::Index j = 0; j < sol.times.size(); ++j) {
    if (eff.col(j).minCoeff() >= 1.0) {
      out.time_to_efficacy_1 = sol.times[j];
      break;
    }
  }
  return out;
}

}  // namespace seiarb::metrics
