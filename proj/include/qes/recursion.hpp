#pragma once

#include "qes/model.hpp"
#include "qes/rational.hpp"

#include <vector>

namespace qes {

// Series v(rho) = sum_i c_i rho^i for the transformed radial function
// u(rho) = rho^(l+1) exp(-rho1 rho^2 / 2) v(rho). The coefficients obey
//   c_{i+1} = ([a + 2 rho1 (i-1)] c_{i-1} - rho0 c_i) / ((i+1)(2l+2+i)),
//   c_1 = -rho0 c_0 / (2(l+1)),
// and c_0 = 1 throughout.

inline constexpr int kMaxFloatTerms = 1000;

/// Power of rho0 carried in front of a symbolic coefficient.
enum class Parity { even = 0, odd = 1 };

constexpr Parity parity_of(int i) { return (i % 2 == 0) ? Parity::even : Parity::odd; }

struct SeriesTail {
  int l;
  double rho0;
  double rho1;
  std::vector<double> coefficients;  // c_0..c_N
};

double seed_c1(const DimensionlessParams& dp);

double next_coefficient(int i, double c_prev, double c_curr, const DimensionlessParams& dp);

/// c_0..c_N in binary64; throws std::invalid_argument unless 1 <= N <= kMaxFloatTerms.
SeriesTail coefficients_float(const DimensionlessParams& dp, int N);

/// c_{i+1} / c_{i-1}; throws std::domain_error when c_{i-1} == 0 or i is outside 1..N-1.
double tail_ratio(const SeriesTail& st, int i);

/// Leading large-i behaviour of tail_ratio: 2 rho1 / i.
double tail_asymptote(double rho1, int i);

/// Exact reduced parameters at a rational dimensionless energy eps = E / (hbar omega):
/// rho1 = 1/(2 eps), a = -1 + (2l+3) rho1, rho0^2 = (2/eps) beta.
/// At the truncation energy eps = n + l + 3/2, with D = 2n + 2l + 3, this gives
/// rho1 = 1/D, a = -2n/D, rho0^2 = (4/D) beta.
struct EnergyPoint {
  int l;
  Rational epsilon;
  Rational rho1;
  Rational a;
  Rational rho0_sq_per_beta;

  static EnergyPoint at(int l, const Rational& epsilon);
  static EnergyPoint pinned(int n, int l);
  Rational rho0_squared(const Rational& beta) const { return rho0_sq_per_beta * beta; }
};

/// c_i = rho0^parity * poly(beta) under a pinned energy.
class BetaPoly {
 public:
  BetaPoly() = default;
  BetaPoly(Parity parity, RationalPoly poly) : parity_(parity), poly_(std::move(poly)) {}

  Parity parity() const { return parity_; }
  const RationalPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  /// Multiply by rho0, folding rho0^2 = rho0_sq_per_beta * beta into the polynomial.
  BetaPoly times_rho0(const Rational& rho0_sq_per_beta) const;

  BetaPoly& operator+=(const BetaPoly& rhs);
  BetaPoly& operator-=(const BetaPoly& rhs);
  BetaPoly& operator*=(const Rational& s);
  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(BetaPoly a, const Rational& s) { return a *= s; }
  friend BetaPoly operator*(const Rational& s, BetaPoly a) { return a *= s; }
  friend bool operator==(const BetaPoly& a, const BetaPoly& b) = default;

  /// Numeric value rho0^parity * poly(beta) with rho0 = sqrt(rho0_sq_per_beta * beta).
  double evaluate(double beta, const Rational& rho0_sq_per_beta) const;

 private:
  Parity parity_ = Parity::even;
  RationalPoly poly_;
};

/// Exact c_0..c_upto as polynomials in beta, energy pinned at eps = n + l + 3/2.
/// Throws std::invalid_argument unless n >= 1, l >= 0 and upto >= n + 2.
std::vector<BetaPoly> coefficients_symbolic(int n, int l, int upto);

/// Exact c_0..c_upto at an arbitrary rational energy (not only the truncation energy).
std::vector<BetaPoly> symbolic_series(const EnergyPoint& ep, int upto);

/// Runs the recursion forward from a caller-supplied head c_0..c_k (k >= 1) up to c_upto.
std::vector<BetaPoly> extend_symbolic(const EnergyPoint& ep, std::vector<BetaPoly> head, int upto);

/// Floating-point reduced parameters for a given beta and eps = E / (hbar omega):
/// rho1 = 1/(2 eps), rho0 = sqrt(2 beta / eps).
DimensionlessParams params_at(int l, double beta, double epsilon);

/// params_at evaluated at eps = n + l + 3/2.
DimensionlessParams pinned_params(int n, int l, double beta);

}  // namespace qes
