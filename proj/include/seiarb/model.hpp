#pragma once

#include <Eigen/Dense>

#include "seiarb/errors.hpp"

namespace seiarb {

using Vec4 = Eigen::Matrix<double, 4, 1>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

// One time point of (S, E, I, A, R, B).
using StateVec = Vec6;
// One time point of (u1, u2, u3, u4).
using ControlVec = Vec4;

// Column-per-grid-node trajectories.
using StateGrid = Eigen::Matrix<double, 6, Eigen::Dynamic>;
using ControlGrid = Eigen::Matrix<double, 4, Eigen::Dynamic>;

namespace comp {
inline constexpr Eigen::Index S = 0;
inline constexpr Eigen::Index E = 1;
inline constexpr Eigen::Index I = 2;
inline constexpr Eigen::Index A = 3;
inline constexpr Eigen::Index R = 4;
inline constexpr Eigen::Index B = 5;
}  // namespace comp

namespace ctrl {
inline constexpr Eigen::Index u1 = 0;
inline constexpr Eigen::Index u2 = 1;
inline constexpr Eigen::Index u3 = 2;
inline constexpr Eigen::Index u4 = 3;
}  // namespace ctrl

// Rate constants. Defaults are the reference parameter set with
// Lambda = d * N(0) for N(0) = 34,813,871.
struct ModelParams {
  double Lambda = (1.0 / (74.87 * 365.0)) * 34813871.0;  // recruitment, persons/day
  double d = 1.0 / (74.87 * 365.0);                      // natural mortality, 1/day
  double beta1 = 0.1233;  // transmission from E
  double beta2 = 0.0542;  // transmission from I
  double beta3 = 0.0020;  // transmission from A
  double beta4 = 0.1101;  // environment-to-susceptible propensity
  double delta = 0.1980;  // incubation exit rate
  double tau = 0.3085;    // asymptomatic fraction
  double d1 = 0.0104;     // disease-induced death rate
  double gamma1 = 0.3680; // symptomatic recovery rate
  double gamma2 = 0.2945; // asymptomatic recovery rate
  double psi1 = 0.2574;   // shedding from E
  double psi2 = 0.2798;   // shedding from I
  double psi3 = 0.1584;   // shedding from A
  double phi = 0.3820;    // environmental viral decay rate

  double k1() const { return d + delta; }
  double k2() const { return gamma1 + d + d1; }
  double k3() const { return gamma2 + d; }
};

// Throws ConfigError listing every violated field constraint.
void validate(const ModelParams& p);

// Sum of the five human compartments (B excluded).
double total_population(const StateVec& x);

// Time derivative of the uncontrolled system.
StateVec rhs_autonomous(const StateVec& x, const ModelParams& p);

// Time derivative of the controlled system.
StateVec rhs_controlled(const StateVec& x, const ControlVec& u, const ModelParams& p);

// Closed-form basic reproduction number.
double compute_r0(const ModelParams& p);

}  // namespace seiarb
