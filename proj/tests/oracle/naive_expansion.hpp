#pragma once

// Test-only oracle: runs the three-term recursion with rho0 kept as a free symbol
// (polynomials in rho0, no parity bookkeeping) and substitutes rho0^2 = (4/D) beta
// only at the very end. Shares nothing with the library beyond the Rational type.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Poly = std::vector<Rational>;  // ascending powers of the symbol

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

inline Poly scale(const Poly& a, const Rational& s) {
  Poly out = a;
  for (auto& c : out) c *= s;
  trim(out);
  return out;
}

inline Poly shift_up(const Poly& a) {
  if (a.empty()) return a;
  Poly out(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

/// c_0..c_upto as polynomials in rho0 at the truncation energy of degree n.
inline std::vector<Poly> coefficients_in_rho0(int n, int l, int upto) {
  const Rational D(2 * n + 2 * l + 3);
  const Rational rho1 = 1 / D;
  const Rational a = -1 + (2 * l + 3) * rho1;
  std::vector<Poly> c;
  c.push_back(Poly{Rational(1)});
  c.push_back(Poly{Rational(0), Rational(-1) / Rational(2 * (l + 1))});
  for (int i = 1; i < upto; ++i) {
    Poly term1 = scale(c[i - 1], a + 2 * rho1 * (i - 1));
    Poly term2 = scale(shift_up(c[i]), Rational(-1));
    c.push_back(scale(add(term1, term2), Rational(1) / Rational((i + 1) * (2 * l + 2 + i))));
  }
  return c;
}

struct Substituted {
  int rho0_power;         // 0 or 1
  Poly beta_coefficients; // ascending powers of beta
};

/// Maps rho0^(2k + p) to rho0^p (4 beta / D)^k. Every monomial of a coefficient must share p.
inline Substituted substitute(const Poly& in_rho0, int n, int l) {
  const Rational four_over_d = Rational(4) / Rational(2 * n + 2 * l + 3);
  Substituted out{-1, {}};
  for (std::size_t k = 0; k < in_rho0.size(); ++k) {
    if (in_rho0[k] == 0) continue;
    int p = static_cast<int>(k % 2);
    if (out.rho0_power == -1) out.rho0_power = p;
    if (out.rho0_power != p) throw std::logic_error("mixed parity in rho0 expansion");
    std::size_t power = k / 2;
    if (out.beta_coefficients.size() <= power) out.beta_coefficients.resize(power + 1);
    Rational factor = 1;
    for (std::size_t j = 0; j < power; ++j) factor *= four_over_d;
    out.beta_coefficients[power] += in_rho0[k] * factor;
  }
  trim(out.beta_coefficients);
  if (out.rho0_power == -1) out.rho0_power = 0;
  return out;
}

/// Constraint c_{n+1}(beta) by naive expansion.
inline Substituted constraint(int n, int l) {
  auto c = coefficients_in_rho0(n, l, n + 1);
  return substitute(c[static_cast<std::size_t>(n + 1)], n, l);
}

}  // namespace oracle
