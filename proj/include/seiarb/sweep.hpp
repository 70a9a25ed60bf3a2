#pragma once

#include "seiarb/pmp.hpp"
#include "seiarb/strategies.hpp"

namespace seiarb::pmp {

struct SweepConfig {
  double t_final = 120.0;  // days
  int n_steps = 1200;      // uniform grid intervals (n_steps + 1 nodes)
  double relaxation = 0.3; // convex-combination factor for control updates
  double tol = 1e-9;       // relative control-change convergence threshold
  int max_iters = 2000;
  // Upper control bounds. u1 and u2 share the S->E inflow factor
  // (1 - u1 - u2), so their bounds must sum to at most 1; the other two
  // controls cap at 0.75.
  Vec4 u_max{0.5, 0.5, 0.75, 0.75};
};

// Throws ConfigError. Enforces grid/relaxation/tolerance ranges and
// u_max in (0, 1]^4 with u1_max + u2_max <= 1 (the S->E inflow factor
// (1 - u1 - u2) must stay nonnegative).
void validate(const SweepConfig& c);

struct OptimalSolution {
  Eigen::VectorXd times;   // n_steps + 1 nodes
  StateGrid states;        // 6 x (n_steps + 1)
  AdjointGrid adjoints;    // 6 x (n_steps + 1)
  ControlGrid controls;    // 4 x (n_steps + 1)
  double objective = 0.0;  // trapezoidal quadrature of the running cost
  int iterations = 0;
  bool converged = false;
  double final_change = 0.0;  // last relative control change (diagnostic)
};

// Classic RK4 over a uniform grid; controls are linearly interpolated at
// half steps. Exposed for direct use by tests and baselines.
StateGrid integrate_forward(const ModelParams& p, const StateVec& init,
                            const ControlGrid& u, double t_final);

// Time-reversed RK4 of the adjoint system from lambda(T) = 0, with state
// and control linearly interpolated at half steps.
AdjointGrid integrate_backward(const ModelParams& p, const ObjectiveWeights& w,
                               const StateGrid& x, const ControlGrid& u, double t_final);

// Trapezoidal quadrature of the running cost along a trajectory.
double objective_value(const StateGrid& x, const ControlGrid& u,
                       const ObjectiveWeights& w, double t_final);

// Forward-backward sweep: iterates forward state integration, backward
// adjoint integration, and relaxed projected control updates until the
// relative control change drops below tol. Inactive channels of the mask
// stay identically zero. Never fails silently: if max_iters is exhausted
// the solution is returned with converged = false and diagnostics set.
OptimalSolution fbs_solve(const ModelParams& p, const ObjectiveWeights& w,
                          const StateVec& init, const strategies::StrategyMask& mask,
                          const SweepConfig& config);

}  // namespace seiarb::pmp
