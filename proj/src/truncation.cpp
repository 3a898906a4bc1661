#include "qes/truncation.hpp"

#include <cmath>
#include <stdexcept>

namespace qes {

ConstraintPoly constraint_polynomial(int n, int l) {
  auto coeffs = coefficients_symbolic(n, l, n + 2);
  const BetaPoly& next = coeffs[static_cast<std::size_t>(n + 1)];
  return {n, l, next.parity(), next.poly()};
}

std::vector<RealRoot> isolate_roots(const ConstraintPoly& cp) {
  if (cp.poly.is_zero())
    throw std::logic_error("constraint polynomial vanishes identically for n=" + std::to_string(cp.n) +
                           ", l=" + std::to_string(cp.l));
  return isolate_positive_roots(cp.poly);
}

double QesSolution::rho1() const { return 1.0 / (2.0 * n + 2.0 * l + 3.0); }

double QesSolution::rho0() const { return std::sqrt(4.0 * beta_value() / (2.0 * n + 2.0 * l + 3.0)); }

std::vector<double> QesSolution::float_coefficients() const {
  auto ep = EnergyPoint::pinned(n, l);
  std::vector<double> out;
  out.reserve(symbolic.size());
  for (const auto& c : symbolic) out.push_back(c.evaluate(beta_value(), ep.rho0_sq_per_beta));
  return out;
}

BetaPoly reduce_at_root(const BetaPoly& p, const RealRoot& root) {
  if (root.exact) return {p.parity(), RationalPoly::constant(p.poly()(root.lower))};
  return {p.parity(), p.poly() % root.factor};
}

std::vector<QesSolution> solve_qes(int n, int l) {
  auto ep = EnergyPoint::pinned(n, l);
  auto symbolic = coefficients_symbolic(n, l, n + 2);
  auto cp = constraint_polynomial(n, l);
  std::vector<QesSolution> out;
  for (auto& root : isolate_roots(cp)) {
    for (int k : {n + 1, n + 2}) {
      if (!reduce_at_root(symbolic[static_cast<std::size_t>(k)], root).is_zero())
        throw std::logic_error("series fails to terminate at a constraint root");
    }
    QesSolution sol{n, l, root, general_energy(n, l), ep.rho0_squared(root.midpoint()), {}, {}};
    Rational at = root.midpoint();
    for (int i = 0; i <= n; ++i) {
      const BetaPoly& c = symbolic[static_cast<std::size_t>(i)];
      sol.coefficients.push_back({c.poly()(at), c.parity()});
      sol.symbolic.push_back(c);
    }
    out.push_back(std::move(sol));
  }
  return out;
}

double energy_degree1(int l, double beta) { return (2.0 * l + 3.0) / 2.0 + beta / (l + 1.0); }

Rational energy_degree1(int l, const Rational& beta) {
  return make_rational(2LL * l + 3, 2) + beta / Rational(l + 1);
}

double energy_degree2(int l, double beta) {
  return 3.0 * (2.0 * l + 3.0) * (l + 2.0) / (2.0 * (3.0 * l + 4.0)) + beta / (3.0 * l + 4.0);
}

Rational energy_degree2(int l, const Rational& beta) {
  return make_rational(3LL * (2 * l + 3) * (l + 2), 2LL * (3 * l + 4)) + beta / Rational(3 * l + 4);
}

Rational general_energy(int n, int l) { return make_rational(2LL * n + 2LL * l + 3, 2); }

std::vector<BetaPoly> tail_at_root(const QesSolution& sol, int count) {
  auto full = coefficients_symbolic(sol.n, sol.l, sol.n + count);
  std::vector<BetaPoly> out;
  for (int i = sol.n + 1; i <= sol.n + count; ++i) out.push_back(reduce_at_root(full[static_cast<std::size_t>(i)], sol.beta));
  return out;
}

std::vector<BetaPoly> exact_ode_residual(const QesSolution& sol) {
  auto ep = EnergyPoint::pinned(sol.n, sol.l);
  const int n = sol.n;
  auto c = [&](int k) -> BetaPoly {
    if (k < 0 || k > n) return BetaPoly(parity_of(k < 0 ? 0 : k), {});
    return sol.symbolic[static_cast<std::size_t>(k)];
  };
  std::vector<BetaPoly> residual;
  for (int j = 0; j <= n + 1; ++j) {
    BetaPoly term = c(j + 1) * Rational((j + 1) * j + 2 * (sol.l + 1) * (j + 1));
    term -= c(j - 1) * Rational(2 * ep.rho1 * (j - 1) + ep.a);
    term += c(j).times_rho0(ep.rho0_sq_per_beta);
    residual.push_back(reduce_at_root(term, sol.beta));
  }
  return residual;
}

}  // namespace qes
