#pragma once

#include <optional>

#include "seiarb/sweep.hpp"

namespace seiarb::metrics {

struct OutcomeSummary {
  double infections_averted = 0.0;  // baseline incidence minus strategy incidence
  double total_cost = 0.0;          // quadratic control cost
  double recoveries = 0.0;          // cumulative recovery inflow
  double objective_J = 0.0;
  double peak_I = 0.0;
  std::optional<double> time_to_efficacy_1;  // first grid time with all four efficacies at 1
};

// (1/2) integral of sum Di*ui^2 dt, trapezoidal rule on the solution grid.
double control_cost(const pmp::OptimalSolution& sol, const pmp::ObjectiveWeights& w);

// Cumulative new-infection inflow into E:
// integral of (1-u1)*(b1 E + b2 I + b3 A)*S/N + (1-u1-u2)*b4*B*S/N dt.
double cumulative_infections(const pmp::OptimalSolution& sol, const ModelParams& p);

// Integral of gamma1*I + gamma2*A dt.
double cumulative_recoveries(const pmp::OptimalSolution& sol, const ModelParams& p);

// Rows are the efficacy curves of E, I, A, B: (X(0) - X(t)) / X(0).
// Throws NumericError naming any initial compartment that is zero.
Eigen::Matrix<double, 4, Eigen::Dynamic> efficacy_curves(const pmp::OptimalSolution& sol,
                                                         const StateVec& init);

// Aggregates every outcome against the zero-control baseline solved on the
// same grid. Throws ConfigError on grid mismatch.
OutcomeSummary summarize(const pmp::OptimalSolution& sol, const pmp::OptimalSolution& baseline,
                         const ModelParams& p, const pmp::ObjectiveWeights& w);

}  // namespace seiarb::metrics
