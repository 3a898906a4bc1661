#pragma once

#include "qes/truncation.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qes {

// Numerical oracles in oscillator units x = r sqrt(m omega / hbar), eps = E / (hbar omega).
// There the radial equation reads u'' = f(x) u with
//   f(x) = x^2 + l(l+1)/x^2 - 2 sqrt(beta)/x - 2 eps,
// and at a truncation point rho1 rho^2 = x^2, so the analytic solution is
//   u(x) ∝ x^(l+1) exp(-x^2/2) v(x / sqrt(rho1)).

/// Uniform grid x_i = x_min + i * step, i = 0..intervals().
struct RadialGrid {
  double x_min = 1e-6;
  double x_max = 10.0;
  double step = 1e-3;

  /// Throws std::invalid_argument unless 0 < x_min < x_max, step > 0 and there are >= 1000 intervals.
  void validate() const;
  std::size_t intervals() const;
  std::size_t points() const { return intervals() + 1; }
  double x(std::size_t i) const { return x_min + static_cast<double>(i) * step; }

  /// Default grid; the step honours QES_DEFAULT_GRID_STEP when set.
  static RadialGrid standard();
};

class NoEigenvalueInBracket : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShootResult {
  double epsilon;
  int node_count;
  /// u_out'/u_out - u_in'/u_in at the match point.
  double mismatch;
  RadialGrid grid;
  int iterations;
  std::size_t match_index;
  /// Matched eigenfunction on the grid (continuous at the match point, not normalized).
  std::vector<double> u;
};

struct WavefunctionRow {
  double x;
  double u;
  double v;
};

struct WavefunctionTable {
  std::vector<WavefunctionRow> rows;
  /// Norm before rescaling, sqrt of the Simpson integral of u^2.
  double norm;
  /// Sign changes of v on the grid.
  int node_count;
};

struct MatrixSpectrum {
  std::vector<double> eigenvalues;
  std::optional<std::string> warning;
};

/// Throws std::domain_error for x <= 0.
double dimensionless_ode_rhs(double x, double epsilon, double beta, int l);

/// Numerov shooting with bisection on the matching condition inside `epsilon_bracket`.
/// Converges when the bracket is narrower than `tol`.
ShootResult numerov_shoot(double beta, int l, std::pair<double, double> epsilon_bracket, const RadialGrid& grid,
                          double tol);

/// Lowest `k_levels` eigenvalues of the second-order finite-difference Hamiltonian
///   -u''/2 + [x^2/2 + l(l+1)/(2x^2) - sqrt(beta)/x] u,  u(0) = u(x_max) = 0, nodes x_i = i * step,
/// by bisection on Sturm counts of the symmetric tridiagonal matrix.
MatrixSpectrum matrix_spectrum(double beta, int l, const RadialGrid& grid, int k_levels);

/// All finite-difference eigenvalues in [lo, hi), ascending.
std::vector<double> matrix_eigenvalues_in(double beta, int l, const RadialGrid& grid, double lo, double hi);

/// Analytic u and v sampled on the grid, u normalized to unit norm with composite Simpson.
WavefunctionTable eval_wavefunction(const QesSolution& sol, const RadialGrid& grid);

/// Max over interior grid points of |rho v'' + 2(l+1-rho1 rho^2) v' + [rho0 - rho a] v|,
/// relative to the largest magnitude of the individual terms.
double ode_residual_numeric(const QesSolution& sol, const RadialGrid& grid);

/// Same residual for the degree-n polynomial built at an arbitrary beta.
double ode_residual_numeric(int n, int l, double beta, const RadialGrid& grid);

/// sqrt of the composite Simpson integral of samples^2 (3/8 rule closes odd interval counts).
double simpson_norm(const std::vector<double>& samples, double step);

struct OracleCheck {
  double target;
  double numerov;
  double matrix;
  int numerov_nodes;
  bool passed;
};

/// Runs both oracles near eps = n + l + 3/2 for the solution's beta.
OracleCheck check_solution(const QesSolution& sol, const RadialGrid& grid, double tol);

}  // namespace qes
