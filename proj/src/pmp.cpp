#include "seiarb/pmp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace seiarb::pmp {

void validate(const ObjectiveWeights& w) {
  const std::pair<double, const char*> all[] = {{w.A1, "A1"}, {w.A2, "A2"}, {w.A3, "A3"},
                                                {w.A4, "A4"}, {w.D1, "D1"}, {w.D2, "D2"},
                                                {w.D3, "D3"}, {w.D4, "D4"}};
  std::ostringstream bad;
  for (const auto& [v, name] : all)
    if (!(v > 0.0) || !std::isfinite(v)) bad << name << " must be finite and > 0; ";
  const std::string msg = bad.str();
  if (!msg.empty()) throw ConfigError("invalid objective weights: " + msg);
}

double running_cost(const StateVec& x, const ControlVec& u, const ObjectiveWeights& w) {
  return w.A1 * x[comp::E] + w.A2 * x[comp::I] + w.A3 * x[comp::A] + w.A4 * x[comp::B] +
         0.5 * (w.D1 * u[ctrl::u1] * u[ctrl::u1] + w.D2 * u[ctrl::u2] * u[ctrl::u2] +
                w.D3 * u[ctrl::u3] * u[ctrl::u3] + w.D4 * u[ctrl::u4] * u[ctrl::u4]);
}

double hamiltonian(const StateVec& x, const AdjointVec& lam, const ControlVec& u,
                   const ObjectiveWeights& w, const ModelParams& p) {
  const double h = running_cost(x, u, w) + lam.dot(rhs_controlled(x, u, p));
  if (!std::isfinite(h)) throw NumericError("hamiltonian: non-finite value");
  return h;
}

AdjointVec rhs_adjoint(const StateVec& x, const AdjointVec& lam, const ControlVec& u,
                       const ObjectiveWeights& w, const ModelParams& p) {
  if (!x.allFinite() || !lam.allFinite()) throw DomainError("rhs_adjoint: non-finite input");
  const double n = total_population(x);
  if (!(n > 0.0)) throw NumericError("rhs_adjoint: total population is not positive");

  const double S = x[comp::S], E = x[comp::E], I = x[comp::I];
  const double A = x[comp::A], B = x[comp::B];
  const double l1 = lam[0], l2 = lam[1], l3 = lam[2], l4 = lam[3], l5 = lam[4], l6 = lam[5];
  const double c1 = 1.0 - u[ctrl::u1];
  const double c2 = 1.0 - u[ctrl::u1] - u[ctrl::u2];
  const double c3 = 1.0 - u[ctrl::u3];
  const double direct = p.beta1 * E + p.beta2 * I + p.beta3 * A;
  // Total S->E flow rate per susceptible-fraction unit: foi + env = g*S/n.
  const double g = c1 * direct + c2 * p.beta4 * B;
  const double Sn = S / n;
  const double gSnn = g * Sn / n;

  AdjointVec dl;
  dl[0] = (l1 - l2) * g * (n - S) / (n * n) + l1 * p.d;
  dl[1] = -w.A1 + (l1 - l2) * (c1 * p.beta1 * Sn - gSnn) + l2 * p.k1() -
          l3 * (1.0 - p.tau) * p.delta - l4 * p.tau * p.delta - l6 * c3 * p.psi1;
  dl[2] = -w.A2 + (l1 - l2) * (c1 * p.beta2 * Sn - gSnn) + l3 * p.k2() - l5 * p.gamma1 -
          l6 * c3 * p.psi2;
  dl[3] = -w.A3 + (l1 - l2) * (c1 * p.beta3 * Sn - gSnn) + l4 * p.k3() - l5 * p.gamma2 -
          l6 * c3 * p.psi3;
  dl[4] = (l2 - l1) * gSnn + l5 * p.d;
  dl[5] = -w.A4 + (l1 - l2) * c2 * p.beta4 * Sn + l6 * (u[ctrl::u4] + p.phi);
  return dl;
}

ControlVec characterize_controls(const StateVec& x, const AdjointVec& lam,
                                 const ObjectiveWeights& w, const ModelParams& p,
                                 const Vec4& u_max) {
  const double n = total_population(x);
  if (!(n > 0.0)) throw NumericError("characterize_controls: total population is not positive");
  const double S = x[comp::S], E = x[comp::E], I = x[comp::I];
  const double A = x[comp::A], B = x[comp::B];
  const double dl = lam[1] - lam[0];
  const double direct = p.beta1 * E + p.beta2 * I + p.beta3 * A;

  Vec4 theta;
  theta[ctrl::u1] = dl * (direct + p.beta4 * B) * S / (w.D1 * n);
  theta[ctrl::u2] = dl * p.beta4 * B * S / (w.D2 * n);
  theta[ctrl::u3] = lam[5] * (p.psi1 * E + p.psi2 * I + p.psi3 * A) / w.D3;
  theta[ctrl::u4] = lam[5] * B / w.D4;

  ControlVec u;
  for (Eigen::Index i = 0; i < 4; ++i) u[i] = std::clamp(theta[i], 0.0, u_max[i]);
  return u;
}

}  // namespace seiarb::pmp
