#include "seiarb/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace seiarb::pmp {

void validate(const SweepConfig& c) {
  std::ostringstream bad;
  if (!(std::isfinite(c.t_final) && c.t_final > 0.0)) bad << "t_final must be finite and > 0; ";
  if (c.n_steps < 2) bad << "n_steps must be >= 2; ";
  if (!(c.relaxation > 0.0 && c.relaxation <= 1.0)) bad << "relaxation must lie in (0, 1]; ";
  if (!(c.tol > 0.0 && c.tol < 1.0)) bad << "tol must lie in (0, 1); ";
  if (c.max_iters < 1) bad << "max_iters must be >= 1; ";
  for (Eigen::Index i = 0; i < 4; ++i)
    if (!(c.u_max[i] > 0.0 && c.u_max[i] <= 1.0)) {
      bad << "u" << (i + 1) << "_max must lie in (0, 1]; ";
    }
  if (c.u_max[ctrl::u1] + c.u_max[ctrl::u2] > 1.0)
    bad << "u1_max + u2_max must not exceed 1; ";
  const std::string msg = bad.str();
  if (!msg.empty()) throw ConfigError("invalid sweep config: " + msg);
}

StateGrid integrate_forward(const ModelParams& p, const StateVec& init,
                            const ControlGrid& u, double t_final) {
  const Eigen::Index n = u.cols() - 1;
  const double h = t_final / static_cast<double>(n);
  StateGrid x(6, n + 1);
  x.col(0) = init;
  for (Eigen::Index j = 0; j < n; ++j) {
    const ControlVec u0 = u.col(j);
    const ControlVec u1 = u.col(j + 1);
    const ControlVec um = 0.5 * (u0 + u1);
    const StateVec xj = x.col(j);
    const StateVec k1 = rhs_controlled(xj, u0, p);
    const StateVec k2 = rhs_controlled(xj + 0.5 * h * k1, um, p);
    const StateVec k3 = rhs_controlled(xj + 0.5 * h * k2, um, p);
    const StateVec k4 = rhs_controlled(xj + h * k3, u1, p);
    x.col(j + 1) = xj + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.col(j + 1).allFinite())
      throw NumericError("forward integration diverged at step " + std::to_string(j + 1));
  }
  return x;
}

AdjointGrid integrate_backward(const ModelParams& p, const ObjectiveWeights& w,
                               const StateGrid& x, const ControlGrid& u, double t_final) {
  const Eigen::Index n = x.cols() - 1;
  const double h = t_final / static_cast<double>(n);
  AdjointGrid lam(6, n + 1);
  lam.col(n).setZero();  // transversality
  for (Eigen::Index j = n; j > 0; --j) {
    const StateVec x1 = x.col(j);
    const StateVec x0 = x.col(j - 1);
    const StateVec xm = 0.5 * (x0 + x1);
    const ControlVec u1 = u.col(j);
    const ControlVec u0 = u.col(j - 1);
    const ControlVec um = 0.5 * (u0 + u1);
    const AdjointVec lj = lam.col(j);
    const AdjointVec k1 = rhs_adjoint(x1, lj, u1, w, p);
    const AdjointVec k2 = rhs_adjoint(xm, lj - 0.5 * h * k1, um, w, p);
    const AdjointVec k3 = rhs_adjoint(xm, lj - 0.5 * h * k2, um, w, p);
    const AdjointVec k4 = rhs_adjoint(x0, lj - h * k3, u0, w, p);
    lam.col(j - 1) = lj - (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!lam.col(j - 1).allFinite())
      throw NumericError("backward integration diverged at step " + std::to_string(j - 1));
  }
  return lam;
}

double objective_value(const StateGrid& x, const ControlGrid& u,
                       const ObjectiveWeights& w, double t_final) {
  const Eigen::Index n = x.cols() - 1;
  const double h = t_final / static_cast<double>(n);
  double sum = 0.0;
  double prev = running_cost(x.col(0), u.col(0), w);
  for (Eigen::Index j = 1; j <= n; ++j) {
    const double cur = running_cost(x.col(j), u.col(j), w);
    sum += 0.5 * h * (prev + cur);
    prev = cur;
  }
  return sum;
}

OptimalSolution fbs_solve(const ModelParams& p, const ObjectiveWeights& w,
                          const StateVec& init, const strategies::StrategyMask& mask,
                          const SweepConfig& config) {
  validate(p);
  validate(w);
  validate(config);
  if (!init.allFinite() || init.minCoeff() < 0.0)
    throw ConfigError("fbs_solve: initial state must be finite and nonnegative");
  if (!(total_population(init) > 0.0))
    throw ConfigError("fbs_solve: initial population must be positive");

  const Eigen::Index n = config.n_steps;
  const double r = config.relaxation;
  OptimalSolution sol;
  sol.times = Eigen::VectorXd::LinSpaced(n + 1, 0.0, config.t_final);

  ControlGrid u = ControlGrid::Zero(4, n + 1);
  StateGrid x = integrate_forward(p, init, u, config.t_final);

  int iter = 0;
  try {
    for (iter = 1; iter <= config.max_iters; ++iter) {
      const AdjointGrid lam = integrate_backward(p, w, x, u, config.t_final);
      ControlGrid u_new(4, n + 1);
      for (Eigen::Index j = 0; j <= n; ++j) {
        const ControlVec proj =
            characterize_controls(x.col(j), lam.col(j), w, p, config.u_max);
        u_new.col(j) = strategies::apply_mask(mask, (1.0 - r) * u.col(j) + r * proj);
      }
      const double num = (u_new - u).cwiseAbs().maxCoeff();
      const double den = std::max(u_new.cwiseAbs().maxCoeff(), 1e-12);
      sol.final_change = num / den;
      u = u_new;
      x = integrate_forward(p, init, u, config.t_final);
      if (sol.final_change <= config.tol) {
        sol.converged = true;
        break;
      }
    }
  } catch (const NumericError& e) {
    throw NumericError("fbs_solve: iteration " + std::to_string(iter) + ": " + e.what());
  }

  sol.iterations = std::min(iter, config.max_iters);
  sol.states = std::move(x);
  sol.controls = std::move(u);
  sol.adjoints = integrate_backward(p, w, sol.states, sol.controls, config.t_final);
  sol.objective = objective_value(sol.states, sol.controls, w, config.t_final);
  return sol;
}

}  // namespace seiarb::pmp
