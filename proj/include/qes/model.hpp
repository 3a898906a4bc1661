#pragma once

namespace qes {

/// Lab-units problem statement for V(r) = -alpha/r + m omega^2 r^2 / 2.
struct PhysicalParams {
  double mass = 1.0;
  double omega = 1.0;
  double alpha = 0.0;  // Coulomb strength, energy * length
  double hbar = 1.0;

  /// Throws std::invalid_argument unless mass, omega, hbar > 0 and alpha >= 0.
  void validate() const;
};

/// Parameters of the reduced radial equation in rho = k r, k = sqrt(2 m E) / hbar.
class DimensionlessParams {
 public:
  DimensionlessParams(double rho0, double rho1, int l);

  double rho0() const { return rho0_; }
  double rho1() const { return rho1_; }
  int l() const { return l_; }
  /// a = -1 + (2l + 3) rho1; always derived, never stored.
  double a() const { return -1.0 + (2.0 * l_ + 3.0) * rho1_; }

 private:
  double rho0_;
  double rho1_;
  int l_;
};

/// Hydrogenic-to-oscillator energy ratio (m alpha^2 / hbar^2) / (hbar omega).
double beta(const PhysicalParams& p);

/// Throws std::domain_error for energy <= 0 (no real k) and std::invalid_argument for l < 0.
DimensionlessParams reduce(const PhysicalParams& p, double energy, int l);

/// Energy recovered from rho1: E = hbar omega / (2 rho1).
double energy_from_rho1(const PhysicalParams& p, double rho1);

/// -alpha/r + m omega^2 r^2 / 2 + hbar^2 l(l+1) / (2 m r^2); throws std::domain_error for r <= 0.
double effective_potential(const PhysicalParams& p, int l, double r);

struct EffectivePotentialSample {
  double r;
  double value;
};

EffectivePotentialSample sample_effective_potential(const PhysicalParams& p, int l, double r);

/// Coulomb strength that realises a given beta in the given unit system.
double alpha_for_beta(const PhysicalParams& units, double beta);

}  // namespace qes
