#include "qes/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace qes {

namespace {

constexpr int kMaxBisections = 200;

struct OutwardInward {
  std::vector<double> outward;  // valid on [0, m + 1]
  std::vector<double> inward;   // valid on [m - 1, N]
};

class NumerovIntegrator {
 public:
  NumerovIntegrator(double beta, int l, const RadialGrid& grid) : beta_(beta), l_(l), grid_(grid) {
    xs_.resize(grid.points());
    for (std::size_t i = 0; i < xs_.size(); ++i) xs_[i] = grid.x(i);
  }

  std::size_t turning_point(double epsilon) const {
    const std::size_t N = xs_.size() - 1;
    std::size_t m = N / 2;
    for (std::size_t i = N; i-- > 0;) {
      if (dimensionless_ode_rhs(xs_[i], epsilon, beta_, l_) < 0.0) {
        m = i;
        break;
      }
    }
    return std::clamp<std::size_t>(m, 2, N - 2);
  }

  OutwardInward integrate(double epsilon, std::size_t m) const {
    const std::size_t N = xs_.size() - 1;
    const double h2 = grid_.step * grid_.step / 12.0;
    std::vector<double> g(N + 1);
    for (std::size_t i = 0; i <= N; ++i) g[i] = 1.0 - h2 * dimensionless_ode_rhs(xs_[i], epsilon, beta_, l_);

    OutwardInward s{std::vector<double>(N + 1, 0.0), std::vector<double>(N + 1, 0.0)};
    for (std::size_t i : {std::size_t{0}, std::size_t{1}}) s.outward[i] = regular_series(xs_[i], epsilon);
    for (std::size_t i = 1; i <= m; ++i)
      s.outward[i + 1] = ((12.0 - 10.0 * g[i]) * s.outward[i] - g[i - 1] * s.outward[i - 1]) / g[i + 1];

    s.inward[N] = std::exp(-0.5 * xs_[N] * xs_[N]);
    s.inward[N - 1] = std::exp(-0.5 * xs_[N - 1] * xs_[N - 1]);
    for (std::size_t i = N - 1; i >= m; --i)
      s.inward[i - 1] = ((12.0 - 10.0 * g[i]) * s.inward[i] - g[i + 1] * s.inward[i + 1]) / g[i - 1];
    return s;
  }

  // Regular Frobenius solution x^(l+1) sum_k b_k x^k, b_0 = 1, with
  // k (k + 2l + 1) b_k = -2 sqrt(beta) b_{k-1} - 2 eps b_{k-2} + b_{k-4}.
  double regular_series(double x, double epsilon) const {
    constexpr int kTerms = 8;
    std::array<double, kTerms> b{};
    b[0] = 1.0;
    const double sqrt_beta = std::sqrt(beta_);
    for (int k = 1; k < kTerms; ++k) {
      double rhs = -2.0 * sqrt_beta * b[k - 1];
      if (k >= 2) rhs -= 2.0 * epsilon * b[k - 2];
      if (k >= 4) rhs += b[k - 4];
      b[k] = rhs / (k * (k + 2.0 * l_ + 1.0));
    }
    double sum = 0.0;
    for (int k = kTerms - 1; k >= 0; --k) sum = sum * x + b[k];
    return std::pow(x, l_ + 1) * sum;
  }

  // Sine of the angle between (u_m, u_{m+1}) of the two solutions; zero exactly when they match.
  double matching(double epsilon, std::size_t m) const {
    auto s = integrate(epsilon, m);
    double wronskian = s.outward[m] * s.inward[m + 1] - s.outward[m + 1] * s.inward[m];
    double scale = std::hypot(s.outward[m], s.outward[m + 1]) * std::hypot(s.inward[m], s.inward[m + 1]);
    if (!(scale > 0.0) || !std::isfinite(scale)) throw SolverFailure("Numerov integration overflowed");
    return wronskian / scale;
  }

 private:
  double beta_;
  int l_;
  RadialGrid grid_;
  std::vector<double> xs_;
};

// Number of eigenvalues of the tridiagonal matrix below lambda (Sturm count via LDL^T pivots).
int count_below(const std::vector<double>& diag, double off, double lambda) {
  int count = 0;
  double d = 1.0;
  const double off2 = off * off;
  const double tiny = std::numeric_limits<double>::min() * 1e10;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    d = (diag[i] - lambda) - (i == 0 ? 0.0 : off2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

struct FiniteDifferenceHamiltonian {
  std::vector<double> diag;
  double off;
  double lower;
  double upper;
};

FiniteDifferenceHamiltonian build_hamiltonian(double beta, int l, const RadialGrid& grid) {
  grid.validate();
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  // the regular solution vanishes at the origin itself, so the inner wall sits at x = 0;
  // a wall at x_min would shift levels by about u'(0)^2 x_min / 2
  const double h = grid.step;
  const auto N = static_cast<std::size_t>(std::llround(grid.x_max / h));
  FiniteDifferenceHamiltonian H{std::vector<double>(N - 1), -0.5 / (h * h), 0.0, 0.0};
  const double sqrt_beta = std::sqrt(beta);
  for (std::size_t i = 1; i < N; ++i) {
    double x = static_cast<double>(i) * h;
    double potential = 0.5 * x * x + l * (l + 1.0) / (2.0 * x * x) - sqrt_beta / x;
    H.diag[i - 1] = 1.0 / (h * h) + potential;
  }
  auto [lo, hi] = std::minmax_element(H.diag.begin(), H.diag.end());
  H.lower = *lo - 2.0 * std::abs(H.off);
  H.upper = *hi + 2.0 * std::abs(H.off);
  return H;
}

// k-th (0-based) eigenvalue inside [lo, hi] where count_below(lo) <= k < count_below(hi).
double bisect_eigenvalue(const FiniteDifferenceHamiltonian& H, int k, double lo, double hi) {
  for (int iter = 0; iter < 400; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(H.diag, H.off, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 1e-14 * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

// v, v', v'' of sum_i c_i rho^i
struct PolyValue {
  double v = 0.0;
  double dv = 0.0;
  double d2v = 0.0;
};

PolyValue eval_with_derivatives(const std::vector<double>& c, double rho) {
  PolyValue out;
  for (std::size_t k = c.size(); k-- > 0;) {
    out.d2v = out.d2v * rho + 2.0 * out.dv;
    out.dv = out.dv * rho + out.v;
    out.v = out.v * rho + c[k];
  }
  return out;
}

double relative_residual(const std::vector<double>& c, int l, double rho0, double rho1, const RadialGrid& grid) {
  grid.validate();
  const double a = -1.0 + (2.0 * l + 3.0) * rho1;
  const double to_rho = 1.0 / std::sqrt(rho1);
  double max_residual = 0.0;
  double max_scale = 0.0;
  for (std::size_t i = 1; i + 1 < grid.points(); ++i) {
    double rho = grid.x(i) * to_rho;
    auto p = eval_with_derivatives(c, rho);
    double t1 = rho * p.d2v;
    double t2 = 2.0 * (l + 1.0 - rho1 * rho * rho) * p.dv;
    double t3 = (rho0 - rho * a) * p.v;
    max_residual = std::max(max_residual, std::abs(t1 + t2 + t3));
    max_scale = std::max(max_scale, std::abs(t1) + std::abs(t2) + std::abs(t3));
  }
  return max_scale > 0.0 ? max_residual / max_scale : 0.0;
}

}  // namespace

void RadialGrid::validate() const {
  if (!(x_min > 0.0)) throw std::invalid_argument("grid x_min must be positive");
  if (!(x_max > x_min)) throw std::invalid_argument("grid x_max must exceed x_min");
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (intervals() < 1000) throw std::invalid_argument("grid needs at least 1000 intervals");
}

std::size_t RadialGrid::intervals() const {
  return static_cast<std::size_t>(std::llround((x_max - x_min) / step));
}

RadialGrid RadialGrid::standard() {
  RadialGrid grid;
  if (const char* env = std::getenv("QES_DEFAULT_GRID_STEP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    double step = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(step > 0.0))
      throw std::invalid_argument(std::string("QES_DEFAULT_GRID_STEP is not a positive decimal: ") + env);
    grid.step = step;
  }
  return grid;
}

double dimensionless_ode_rhs(double x, double epsilon, double beta, int l) {
  if (!(x > 0.0)) throw std::domain_error("radial equation is singular at x <= 0");
  return x * x + l * (l + 1.0) / (x * x) - 2.0 * std::sqrt(beta) / x - 2.0 * epsilon;
}

ShootResult numerov_shoot(double beta, int l, std::pair<double, double> epsilon_bracket, const RadialGrid& grid,
                          double tol) {
  grid.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  auto [lo, hi] = epsilon_bracket;
  if (lo > hi) std::swap(lo, hi);

  NumerovIntegrator numerov(beta, l, grid);
  const std::size_t m = numerov.turning_point(0.5 * (lo + hi));
  double f_lo = numerov.matching(lo, m);
  double f_hi = numerov.matching(hi, m);
  if (f_lo * f_hi > 0.0)
    throw NoEigenvalueInBracket("no eigenvalue in bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  int iterations = 0;
  if (f_lo == 0.0) {
    hi = lo;
  } else if (f_hi == 0.0) {
    lo = hi;
  }
  while (hi - lo > tol) {
    if (++iterations > kMaxBisections)
      throw SolverFailure("Numerov bisection did not converge; bracket width " + std::to_string(hi - lo));
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double f_mid = numerov.matching(mid, m);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }

  ShootResult result{0.5 * (lo + hi), 0, 0.0, grid, iterations, m, {}};
  auto s = numerov.integrate(result.epsilon, m);
  const double h = grid.step;
  double d_out = (s.outward[m + 1] - s.outward[m - 1]) / (2.0 * h);
  double d_in = (s.inward[m + 1] - s.inward[m - 1]) / (2.0 * h);
  result.mismatch = d_out / s.outward[m] - d_in / s.inward[m];

  double scale = s.outward[m] / s.inward[m];
  result.u.resize(grid.points());
  for (std::size_t i = 0; i < result.u.size(); ++i) result.u[i] = i <= m ? s.outward[i] : scale * s.inward[i];
  for (std::size_t i = 1; i < result.u.size(); ++i)
    if ((result.u[i - 1] < 0.0 && result.u[i] > 0.0) || (result.u[i - 1] > 0.0 && result.u[i] < 0.0)) ++result.node_count;
  return result;
}

MatrixSpectrum matrix_spectrum(double beta, int l, const RadialGrid& grid, int k_levels) {
  if (k_levels < 1) throw std::invalid_argument("k_levels must be >= 1");
  auto H = build_hamiltonian(beta, l, grid);
  if (static_cast<std::size_t>(k_levels) > H.diag.size()) throw std::invalid_argument("more levels than grid points");
  MatrixSpectrum out;
  for (int k = 0; k < k_levels; ++k) out.eigenvalues.push_back(bisect_eigenvalue(H, k, H.lower, H.upper));
  // leading second-order discretization error scales like step^2 eps^2
  double eps_max = std::abs(out.eigenvalues.back());
  double estimate = grid.step * grid.step * eps_max * eps_max / 8.0;
  if (estimate > 1e-5)
    out.warning = "grid may be too coarse: estimated eigenvalue error " + std::to_string(estimate) + " exceeds 1e-5";
  return out;
}

std::vector<double> matrix_eigenvalues_in(double beta, int l, const RadialGrid& grid, double lo, double hi) {
  auto H = build_hamiltonian(beta, l, grid);
  int first = count_below(H.diag, H.off, lo);
  int last = count_below(H.diag, H.off, hi);
  std::vector<double> out;
  for (int k = first; k < last; ++k) out.push_back(bisect_eigenvalue(H, k, lo, hi));
  return out;
}

double simpson_norm(const std::vector<double>& samples, double step) {
  const std::size_t intervals = samples.empty() ? 0 : samples.size() - 1;
  if (intervals < 2) throw std::invalid_argument("Simpson quadrature needs at least two intervals");
  auto sq = [&](std::size_t i) { return samples[i] * samples[i]; };
  std::size_t even = intervals % 2 == 0 ? intervals : intervals - 3;
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= even; i += 2) sum += sq(i) + 4.0 * sq(i + 1) + sq(i + 2);
  sum *= step / 3.0;
  if (even != intervals) {
    std::size_t i = even;
    sum += 3.0 * step / 8.0 * (sq(i) + 3.0 * sq(i + 1) + 3.0 * sq(i + 2) + sq(i + 3));
  }
  return std::sqrt(sum);
}

WavefunctionTable eval_wavefunction(const QesSolution& sol, const RadialGrid& grid) {
  grid.validate();
  const auto c = sol.float_coefficients();
  const double to_rho = 1.0 / std::sqrt(sol.rho1());
  WavefunctionTable table{{}, 0.0, 0};
  table.rows.reserve(grid.points());
  std::vector<double> u(grid.points());
  for (std::size_t i = 0; i < grid.points(); ++i) {
    double x = grid.x(i);
    double v = eval_with_derivatives(c, x * to_rho).v;
    u[i] = std::pow(x, sol.l + 1) * std::exp(-0.5 * x * x) * v;
    table.rows.push_back({x, u[i], v});
  }
  table.norm = simpson_norm(u, grid.step);
  for (auto& row : table.rows) row.u /= table.norm;
  for (std::size_t i = 1; i < table.rows.size(); ++i)
    if ((table.rows[i - 1].v < 0.0) != (table.rows[i].v < 0.0) && table.rows[i].v != 0.0) ++table.node_count;
  return table;
}

double ode_residual_numeric(const QesSolution& sol, const RadialGrid& grid) {
  return relative_residual(sol.float_coefficients(), sol.l, sol.rho0(), sol.rho1(), grid);
}

double ode_residual_numeric(int n, int l, double beta, const RadialGrid& grid) {
  auto symbolic = coefficients_symbolic(n, l, n + 2);
  auto ep = EnergyPoint::pinned(n, l);
  std::vector<double> c;
  for (int i = 0; i <= n; ++i) c.push_back(symbolic[static_cast<std::size_t>(i)].evaluate(beta, ep.rho0_sq_per_beta));
  auto dp = pinned_params(n, l, beta);
  return relative_residual(c, l, dp.rho0(), dp.rho1(), grid);
}

OracleCheck check_solution(const QesSolution& sol, const RadialGrid& grid, double tol) {
  const double target = to_double(sol.epsilon);
  const double beta = sol.beta_value();
  OracleCheck check{target, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(), -1,
                    false};

  auto nearby = matrix_eigenvalues_in(beta, sol.l, grid, target - 0.5, target + 0.5);
  double half_width = 0.05;
  if (!nearby.empty()) {
    auto closest = std::min_element(nearby.begin(), nearby.end(),
                                    [&](double a, double b) { return std::abs(a - target) < std::abs(b - target); });
    check.matrix = *closest;
    for (auto it = nearby.begin(); it != nearby.end(); ++it)
      if (it != closest) half_width = std::min(half_width, 0.5 * std::abs(*it - target));
  }
  try {
    auto shot = numerov_shoot(beta, sol.l, {target - half_width, target + half_width}, grid, 1e-11);
    check.numerov = shot.epsilon;
    check.numerov_nodes = shot.node_count;
  } catch (const NoEigenvalueInBracket&) {
    // leave NaN; the check fails below
  }
  check.passed = std::abs(check.numerov - target) < tol && std::abs(check.matrix - target) < tol &&
                 std::abs(check.numerov - check.matrix) < tol;
  return check;
}

}  // namespace qes
