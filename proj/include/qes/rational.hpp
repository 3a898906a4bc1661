#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qes {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational number, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(long long num, long long den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Truncated (toward -inf) decimal expansion with `digits` fractional digits.
std::string to_decimal(const Rational& r, int digits);
/// Same, rounded toward +inf.
std::string to_decimal_ceil(const Rational& r, int digits);

double to_double(const Rational& r);

/// Exact rational equal to a finite binary64 value.
Rational from_double(double x);

int sign(const Rational& r);

/// Univariate polynomial with exact rational coefficients, ascending powers.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  /// c * x^k
  static RationalPoly monomial(const Rational& c, int k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  int sign_at(const Rational& x) const { return sign((*this)(x)); }

  RationalPoly derivative() const;
  RationalPoly monic() const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(RationalPoly a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;
  RationalPoly operator%(const RationalPoly& divisor) const { return divmod(divisor).second; }

  /// Integer polynomial with the same roots: coefficients coprime, positive leading term.
  std::vector<BigInt> primitive_integer_coeffs() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
RationalPoly gcd(RationalPoly a, RationalPoly b);

/// Square-free factors f_k with p = lc * prod f_k^k; entry k-1 holds f_k (possibly constant 1).
std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p);

}  // namespace qes
