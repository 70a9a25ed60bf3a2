#include "seiarb/model.hpp"

#include <cmath>
#include <sstream>

namespace seiarb {

void validate(const ModelParams& p) {
  std::ostringstream bad;
  auto nonneg = [&bad](double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v)) bad << name << " must be finite and >= 0; ";
  };
  nonneg(p.Lambda, "Lambda");
  nonneg(p.beta1, "beta1");
  nonneg(p.beta2, "beta2");
  nonneg(p.beta3, "beta3");
  nonneg(p.beta4, "beta4");
  nonneg(p.delta, "delta");
  nonneg(p.d1, "d1");
  nonneg(p.gamma1, "gamma1");
  nonneg(p.gamma2, "gamma2");
  nonneg(p.psi1, "psi1");
  nonneg(p.psi2, "psi2");
  nonneg(p.psi3, "psi3");
  if (!(p.d > 0.0) || !std::isfinite(p.d)) bad << "d must be finite and > 0; ";
  if (!(p.phi > 0.0) || !std::isfinite(p.phi)) bad << "phi must be finite and > 0; ";
  if (!(p.tau >= 0.0 && p.tau <= 1.0)) bad << "tau must lie in [0, 1]; ";
  const std::string msg = bad.str();
  if (!msg.empty()) throw ConfigError("invalid model parameters: " + msg);
}

double total_population(const StateVec& x) {
  return x[comp::S] + x[comp::E] + x[comp::I] + x[comp::A] + x[comp::R];
}

StateVec rhs_controlled(const StateVec& x, const ControlVec& u, const ModelParams& p) {
  if (!x.allFinite()) throw DomainError("rhs: non-finite state component");
  if (!u.allFinite() || u.minCoeff() < 0.0 || u.maxCoeff() > 1.0)
    throw DomainError("rhs: control outside [0, 1]^4");
  const double n = total_population(x);
  if (!(n > 0.0)) throw NumericError("rhs: total population is not positive");

  const double S = x[comp::S], E = x[comp::E], I = x[comp::I];
  const double A = x[comp::A], R = x[comp::R], B = x[comp::B];
  const double direct = p.beta1 * E + p.beta2 * I + p.beta3 * A;
  const double foi = (1.0 - u[ctrl::u1]) * direct * S / n;
  const double env = (1.0 - u[ctrl::u1] - u[ctrl::u2]) * p.beta4 * B * S / n;
  const double shed = p.psi1 * E + p.psi2 * I + p.psi3 * A;

  StateVec dx;
  dx[comp::S] = p.Lambda - foi - env - p.d * S;
  dx[comp::E] = foi + env - (p.delta + p.d) * E;
  dx[comp::I] = (1.0 - p.tau) * p.delta * E - (p.d + p.d1 + p.gamma1) * I;
  dx[comp::A] = p.tau * p.delta * E - (p.d + p.gamma2) * A;
  dx[comp::R] = p.gamma1 * I + p.gamma2 * A - p.d * R;
  dx[comp::B] = (1.0 - u[ctrl::u3]) * shed - (u[ctrl::u4] + p.phi) * B;
  return dx;
}

StateVec rhs_autonomous(const StateVec& x, const ModelParams& p) {
  return rhs_controlled(x, ControlVec::Zero(), p);
}

double compute_r0(const ModelParams& p) {
  const double k1 = p.k1(), k2 = p.k2(), k3 = p.k3();
  const double denom = k1 * k2 * k3 * p.phi;
  if (denom == 0.0) throw NumericError("compute_r0: k1*k2*k3*phi is zero");
  const double num =
      k2 * (p.delta * p.tau * (p.beta4 * p.psi3 + p.beta3 * p.phi) +
            k3 * (p.beta4 * p.psi1 + p.beta1 * p.phi)) +
      p.delta * k3 * (1.0 - p.tau) * (p.beta4 * p.psi2 + p.beta2 * p.phi);
  return num / denom;
}

}  // namespace seiarb
