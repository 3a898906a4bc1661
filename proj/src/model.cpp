#include "qes/model.hpp"

#include <cmath>
#include <stdexcept>

namespace qes {

void PhysicalParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be positive");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be positive");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be non-negative");
}

DimensionlessParams::DimensionlessParams(double rho0, double rho1, int l) : rho0_(rho0), rho1_(rho1), l_(l) {
  if (!(rho0 >= 0.0)) throw std::invalid_argument("rho0 must be non-negative");
  if (!(rho1 > 0.0)) throw std::invalid_argument("rho1 must be positive");
  if (l < 0) throw std::invalid_argument("l must be non-negative");
}

double beta(const PhysicalParams& p) {
  p.validate();
  return (p.mass * p.alpha * p.alpha / (p.hbar * p.hbar)) / (p.hbar * p.omega);
}

DimensionlessParams reduce(const PhysicalParams& p, double energy, int l) {
  p.validate();
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  if (!(energy > 0.0)) throw std::domain_error("energy must be positive for the combined potential");
  double k = std::sqrt(2.0 * p.mass * energy) / p.hbar;
  double rho0 = 2.0 * p.mass * p.alpha / (p.hbar * p.hbar * k);
  double rho1 = p.mass * p.omega / (p.hbar * k * k);
  return {rho0, rho1, l};
}

double energy_from_rho1(const PhysicalParams& p, double rho1) { return p.hbar * p.omega / (2.0 * rho1); }

double effective_potential(const PhysicalParams& p, int l, double r) {
  if (!(r > 0.0)) throw std::domain_error("effective potential is singular at r <= 0");
  double centrifugal = p.hbar * p.hbar * l * (l + 1.0) / (2.0 * p.mass * r * r);
  return -p.alpha / r + 0.5 * p.mass * p.omega * p.omega * r * r + centrifugal;
}

EffectivePotentialSample sample_effective_potential(const PhysicalParams& p, int l, double r) {
  return {r, effective_potential(p, l, r)};
}

double alpha_for_beta(const PhysicalParams& units, double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  return std::sqrt(beta * units.hbar * units.hbar * units.hbar * units.omega / units.mass);
}

}  // namespace qes
