#pragma once

#include "seiarb/model.hpp"

namespace seiarb::pmp {

// One time point of (lambda1, ..., lambda6).
using AdjointVec = Vec6;
using AdjointGrid = Eigen::Matrix<double, 6, Eigen::Dynamic>;

// Objective functional weights: linear state burden (A) and quadratic
// control cost (D).
struct ObjectiveWeights {
  double A1 = 1.0, A2 = 1.0, A3 = 1.0, A4 = 1.0;
  double D1 = 50.0, D2 = 50.0, D3 = 100.0, D4 = 200.0;
};

// Throws ConfigError; every weight must be strictly positive.
void validate(const ObjectiveWeights& w);

// Integrand of the objective: A1*E + A2*I + A3*A + A4*B + (1/2) sum Di*ui^2.
double running_cost(const StateVec& x, const ControlVec& u, const ObjectiveWeights& w);

// Running cost plus costate-weighted controlled dynamics.
double hamiltonian(const StateVec& x, const AdjointVec& lam, const ControlVec& u,
                   const ObjectiveWeights& w, const ModelParams& p);

// dlambda/dt = -dH/dx, derived from the Hamiltonian.
AdjointVec rhs_adjoint(const StateVec& x, const AdjointVec& lam, const ControlVec& u,
                       const ObjectiveWeights& w, const ModelParams& p);

// Pointwise minimizer of H in u: ui* = clamp(theta_i, 0, u_max_i), where
// theta_i solves dH/du_i = 0.
ControlVec characterize_controls(const StateVec& x, const AdjointVec& lam,
                                 const ObjectiveWeights& w, const ModelParams& p,
                                 const Vec4& u_max);

}  // namespace seiarb::pmp
