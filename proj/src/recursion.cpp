#include "qes/recursion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qes {

double seed_c1(const DimensionlessParams& dp) { return -dp.rho0() / (2.0 * (dp.l() + 1)); }

double next_coefficient(int i, double c_prev, double c_curr, const DimensionlessParams& dp) {
  if (i < 1) throw std::invalid_argument("recursion index must be >= 1");
  double prefactor = dp.a() + 2.0 * dp.rho1() * (i - 1);
  double denom = static_cast<double>(i + 1) * (2.0 * dp.l() + 2.0 + i);
  return (prefactor * c_prev - dp.rho0() * c_curr) / denom;
}

SeriesTail coefficients_float(const DimensionlessParams& dp, int N) {
  if (N < 1 || N > kMaxFloatTerms)
    throw std::invalid_argument("term count must lie in 1.." + std::to_string(kMaxFloatTerms));
  SeriesTail st{dp.l(), dp.rho0(), dp.rho1(), {}};
  st.coefficients.reserve(static_cast<std::size_t>(N) + 1);
  st.coefficients.push_back(1.0);
  st.coefficients.push_back(seed_c1(dp));
  for (int i = 1; i < N; ++i) {
    const auto& c = st.coefficients;
    st.coefficients.push_back(next_coefficient(i, c[i - 1], c[i], dp));
  }
  return st;
}

double tail_ratio(const SeriesTail& st, int i) {
  int N = static_cast<int>(st.coefficients.size()) - 1;
  if (i < 1 || i + 1 > N) throw std::domain_error("tail ratio index out of range");
  double denom = st.coefficients[static_cast<std::size_t>(i - 1)];
  if (denom == 0.0) throw std::domain_error("tail ratio undefined: c_{i-1} is zero");
  return st.coefficients[static_cast<std::size_t>(i + 1)] / denom;
}

double tail_asymptote(double rho1, int i) { return 2.0 * rho1 / i; }

EnergyPoint EnergyPoint::at(int l, const Rational& epsilon) {
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  if (epsilon <= 0) throw std::domain_error("energy must be positive");
  Rational rho1 = 1 / (2 * epsilon);
  return {l, epsilon, rho1, Rational(-1 + (2 * l + 3) * rho1), Rational(2 / epsilon)};
}

EnergyPoint EnergyPoint::pinned(int n, int l) {
  if (n < 1) throw std::invalid_argument("degree n must be >= 1");
  return at(l, make_rational(2LL * n + 2LL * l + 3, 2));
}

BetaPoly BetaPoly::times_rho0(const Rational& rho0_sq_per_beta) const {
  if (parity_ == Parity::even) return {Parity::odd, poly_};
  return {Parity::even, poly_ * RationalPoly::monomial(rho0_sq_per_beta, 1)};
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (parity_ != rhs.parity_) throw std::logic_error("adding beta polynomials of different parity");
  poly_ += rhs.poly_;
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = BetaPoly(rhs.parity_, -rhs.poly_);
  if (parity_ != rhs.parity_) throw std::logic_error("subtracting beta polynomials of different parity");
  poly_ -= rhs.poly_;
  return *this;
}

BetaPoly& BetaPoly::operator*=(const Rational& s) {
  poly_ *= s;
  return *this;
}

double BetaPoly::evaluate(double beta, const Rational& rho0_sq_per_beta) const {
  double value = poly_(beta);
  if (parity_ == Parity::odd) value *= std::sqrt(to_double(rho0_sq_per_beta) * beta);
  return value;
}

std::vector<BetaPoly> extend_symbolic(const EnergyPoint& ep, std::vector<BetaPoly> head, int upto) {
  if (head.size() < 2) throw std::invalid_argument("symbolic recursion needs c_0 and c_1");
  const int l = ep.l;
  for (int i = static_cast<int>(head.size()) - 1; i < upto; ++i) {
    Rational prefactor = ep.a + 2 * ep.rho1 * (i - 1);
    BetaPoly next = head[static_cast<std::size_t>(i - 1)] * prefactor;
    next -= head[static_cast<std::size_t>(i)].times_rho0(ep.rho0_sq_per_beta);
    next *= Rational(1) / Rational((i + 1) * (2 * l + 2 + i));
    // keep the parity label meaningful even when the coefficient vanishes
    head.emplace_back(parity_of(i + 1), next.poly());
  }
  return head;
}

std::vector<BetaPoly> symbolic_series(const EnergyPoint& ep, int upto) {
  if (upto < 1) throw std::invalid_argument("need at least c_0 and c_1");
  std::vector<BetaPoly> head;
  head.emplace_back(Parity::even, RationalPoly::constant(1));
  head.emplace_back(Parity::odd, RationalPoly::constant(Rational(-1) / Rational(2 * (ep.l + 1))));
  return extend_symbolic(ep, std::move(head), upto);
}

std::vector<BetaPoly> coefficients_symbolic(int n, int l, int upto) {
  if (n < 1) throw std::invalid_argument("degree n must be >= 1");
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  if (upto < n + 2) throw std::invalid_argument("need coefficients at least through c_{n+2}");
  return symbolic_series(EnergyPoint::pinned(n, l), upto);
}

DimensionlessParams params_at(int l, double beta, double epsilon) {
  if (!(epsilon > 0.0)) throw std::domain_error("energy must be positive");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  return {std::sqrt(2.0 * beta / epsilon), 1.0 / (2.0 * epsilon), l};
}

DimensionlessParams pinned_params(int n, int l, double beta) { return params_at(l, beta, n + l + 1.5); }

}  // namespace qes
