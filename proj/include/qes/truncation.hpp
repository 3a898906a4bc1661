#pragma once

#include "qes/recursion.hpp"
#include "qes/roots.hpp"

#include <vector>

namespace qes {

// Degree convention: n is the degree of the polynomial v. The series terminates when
// c_{n+1}(beta) = 0 and the oscillator condition a + 2 rho1 n = 0 holds, i.e. at
// eps = E / (hbar omega) = n + l + 3/2. In the usual labels, n = 1 is the E_{1l} level
// (c_2 = c_3 = 0) and n = 2 is E_{2l} (c_3 = c_4 = 0).

/// The symbolic c_{n+1} at the truncation energy. The overall rho0^parity factor is kept
/// apart from `poly` because rho0 > 0 never contributes a root.
struct ConstraintPoly {
  int n;
  int l;
  Parity rho0_factor;
  RationalPoly poly;
};

ConstraintPoly constraint_polynomial(int n, int l);

/// Positive real roots of the constraint, ascending. Throws std::logic_error for a zero polynomial.
std::vector<RealRoot> isolate_roots(const ConstraintPoly& cp);

/// c_i = value * rho0^parity, with rho0^2 = QesSolution::rho0_squared.
struct SeriesCoefficient {
  Rational value;
  Parity rho0_power;
};

/// One closed-form bound state.
struct QesSolution {
  int n;
  int l;
  RealRoot beta;
  Rational epsilon;
  /// rho0^2 at beta (at the enclosure midpoint when beta is irrational).
  Rational rho0_squared;
  /// c_0..c_n at beta; exact only when beta.exact.
  std::vector<SeriesCoefficient> coefficients;
  /// c_0..c_n as polynomials in beta.
  std::vector<BetaPoly> symbolic;

  double beta_value() const { return beta.value(); }
  double rho1() const;
  double rho0() const;
  /// Floating c_0..c_n, evaluated from the symbolic form at the best double for beta.
  std::vector<double> float_coefficients() const;
};

/// One QesSolution per positive root of the constraint; empty when there is none.
/// Throws std::logic_error if c_{n+1} or c_{n+2} fails to vanish at a root.
std::vector<QesSolution> solve_qes(int n, int l);

/// (2l + 3)/2 + beta/(l + 1): the c_2 = 0 condition solved for eps.
double energy_degree1(int l, double beta);
Rational energy_degree1(int l, const Rational& beta);

/// 3(2l + 3)(l + 2)/(2(3l + 4)) + beta/(3l + 4): the c_3 = 0 condition solved for eps.
double energy_degree2(int l, double beta);
Rational energy_degree2(int l, const Rational& beta);

/// n + l + 3/2.
Rational general_energy(int n, int l);

/// `p` reduced modulo the defining factor of the root; zero iff p vanishes at every root of
/// that factor (for exact roots, iff p(beta) == 0).
BetaPoly reduce_at_root(const BetaPoly& p, const RealRoot& root);

/// Exact c_{n+1}..c_{n+count} at the solution's root (each reduced by reduce_at_root).
std::vector<BetaPoly> tail_at_root(const QesSolution& sol, int count);

/// Coefficients of rho^0..rho^{n+1} of
///   rho v'' + 2(l + 1 - rho1 rho^2) v' + [rho0 - rho(-1 + (2l + 3) rho1)] v
/// for v = sum_{i<=n} c_i rho^i, reduced at the solution's root. All zero iff v solves the ODE.
std::vector<BetaPoly> exact_ode_residual(const QesSolution& sol);

}  // namespace qes
