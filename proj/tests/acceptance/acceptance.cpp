// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Tolerances, grids and time budgets are pinned here and never read from the environment.

#include "oracle/naive_expansion.hpp"
#include "qes/model.hpp"
#include "qes/recursion.hpp"
#include "qes/truncation.hpp"
#include "qes/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace qes;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    else detail << "; ";
    passed = false;
    detail << why;
  }
};

RadialGrid pinned_grid() { return RadialGrid{1e-6, 10.0, 1e-3}; }

constexpr double kOracleTol = 1e-5;

// Both oracles within kOracleTol of the closed form and of each other.
bool oracle_agrees(const QesSolution& s, Outcome& o, double& worst) {
  OracleCheck c = check_solution(s, pinned_grid(), kOracleTol);
  double dn = std::abs(c.numerov - c.target);
  double dm = std::abs(c.matrix - c.target);
  double dnm = std::abs(c.numerov - c.matrix);
  worst = std::max({worst, dn, dm, dnm});
  bool ok = c.passed && dn < kOracleTol && dm < kOracleTol && dnm < kOracleTol;
  if (!ok) {
    std::ostringstream why;
    why.precision(3);
    why << "n=" << s.n << " l=" << s.l << " beta=" << s.beta.value() << ": |numerov-eps|=" << dn
        << " |matrix-eps|=" << dm << " |numerov-matrix|=" << dnm;
    o.fail(why.str());
  }
  return ok;
}

// 1. n = 1 and n = 2 roots are the integers l + 1 and 4l + 5.
void integer_beta_law(Outcome& o) {
  for (int l = 0; l <= 20; ++l) {
    auto s1 = solve_qes(1, l);
    auto s2 = solve_qes(2, l);
    if (s1.size() != 1 || !s1[0].beta.exact || s1[0].beta.lower != l + 1)
      o.fail("n=1 l=" + std::to_string(l) + " root is not l+1");
    if (s2.size() != 1 || !s2[0].beta.exact || s2[0].beta.lower != 4 * l + 5)
      o.fail("n=2 l=" + std::to_string(l) + " root is not 4l+5");
  }
  if (o.passed) o.detail << "l=0..20, exact equality";
}

// 2. Energy formulas agree exactly at the roots.
void energy_formulas(Outcome& o) {
  for (int l = 0; l <= 20; ++l) {
    const Rational beta1(l + 1), beta2(4 * l + 5);
    const Rational e1 = general_energy(1, l), e2 = general_energy(2, l);
    if (e1 != Rational(l) + make_rational(5, 2)) o.fail("general_energy(1," + std::to_string(l) + ") != l+5/2");
    if (e2 != Rational(l) + make_rational(7, 2)) o.fail("general_energy(2," + std::to_string(l) + ") != l+7/2");
    if (energy_degree1(l, beta1) != e1) o.fail("energy_degree1 mismatch at l=" + std::to_string(l));
    if (energy_degree2(l, beta2) != e2) o.fail("energy_degree2 mismatch at l=" + std::to_string(l));
    auto s1 = solve_qes(1, l);
    auto s2 = solve_qes(2, l);
    if (s1.empty() || s1[0].epsilon != e1) o.fail("solve_qes(1," + std::to_string(l) + ") epsilon");
    if (s2.empty() || s2[0].epsilon != e2) o.fail("solve_qes(2," + std::to_string(l) + ") epsilon");
  }
  if (o.passed) o.detail << "l=0..20, exact equality";
}

// 3. The series terminates and v solves the ODE, exactly.
void truncation_exact(Outcome& o) {
  int count = 0;
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= 6; ++l)
      for (const auto& s : solve_qes(n, l)) {
        ++count;
        for (const auto& c : tail_at_root(s, 10))
          if (!c.is_zero()) o.fail("nonzero tail at n=" + std::to_string(n) + " l=" + std::to_string(l));
        for (const auto& r : exact_ode_residual(s))
          if (!r.is_zero()) o.fail("nonzero ODE residual at n=" + std::to_string(n) + " l=" + std::to_string(l));
      }
  if (o.passed) o.detail << count << " solutions, c_{n+1}..c_{n+10} and residual identically zero";
}

// 4. Away from the oscillator energy a single condition does not terminate the series, and the
//    untruncated coefficients grow like exp(rho1 rho^2): c_{i+1}/c_{i-1} against 2 rho1 / i.
void naive_truncation(Outcome& o) {
  struct Generic {
    int n;
    int l;
    Rational epsilon;
  };
  int roots_checked = 0;
  for (const auto& g : {Generic{1, 0, make_rational(11, 4)}, Generic{2, 1, make_rational(19, 5)},
                        Generic{3, 0, make_rational(13, 3)}, Generic{4, 2, make_rational(17, 2)}}) {
    auto ep = EnergyPoint::at(g.l, g.epsilon);
    auto c = symbolic_series(ep, g.n + 2);
    for (const auto& root : isolate_positive_roots(c[static_cast<std::size_t>(g.n + 1)].poly())) {
      ++roots_checked;
      if (reduce_at_root(c[static_cast<std::size_t>(g.n + 2)], root).is_zero())
        o.fail("c_{n+2} vanishes at n=" + std::to_string(g.n));
    }
  }
  if (roots_checked == 0) o.fail("no generic root to test");

  struct Point {
    int l;
    double beta;
    double epsilon;
  };
  constexpr int i = 200;
  std::ostringstream measured;
  measured.precision(4);
  bool ratio_ok = true;
  for (const auto& p : {Point{0, 2.3, 2.0}, Point{0, 1.0, 3.5}, Point{2, 5.0, 6.0}}) {
    DimensionlessParams dp = params_at(p.l, p.beta, p.epsilon);
    SeriesTail st = coefficients_float(dp, i + 1);
    double rel = tail_ratio(st, i) / tail_asymptote(dp.rho1(), i) - 1.0;
    measured << " (l=" << p.l << ",beta=" << p.beta << ",eps=" << p.epsilon << "): " << 100 * rel << "%";
    if (std::abs(rel) >= 0.01) ratio_ok = false;
  }
  if (!ratio_ok) o.fail("ratio c_{i+1}/c_{i-1} at i=200 is not within 1% of 2 rho1/i");
  o.detail << "; c_{n+2} != 0 at " << roots_checked << " generic roots; ratio deviation" << measured.str();
}

// 5. Numerov and the finite-difference matrix reproduce eps = n + l + 3/2.
void numerical_oracles(Outcome& o) {
  int count = 0;
  double worst = 0;
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= 2; ++l)
      for (const auto& s : solve_qes(n, l)) {
        ++count;
        oracle_agrees(s, o, worst);
      }
  std::ostringstream d;
  d.precision(3);
  d << "; " << count << " roots, worst difference " << worst << ", tol 1e-5, step 1e-3, x_max 10";
  o.detail << d.str();
}

// 6. Changing m, omega and alpha at fixed beta leaves eps unchanged.
void scale_invariance(Outcome& o) {
  // the full pipeline: beta from the physical parameters, matching QES point, both oracles
  struct Run {
    Rational exact;
    double numerov = 0;
    double matrix = 0;
  };
  auto pipeline = [](const PhysicalParams& p) -> std::optional<Run> {
    p.validate();
    double b = beta(p);
    for (int n = 1; n <= 4; ++n)
      for (const auto& s : solve_qes(n, 0))
        if (std::abs(s.beta_value() - b) < 1e-9) {
          Run r{s.epsilon};
          double eps = to_double(s.epsilon);
          // oracles run at the beta implied by the physical parameters, not at the root
          r.numerov = numerov_shoot(b, 0, {eps - 0.05, eps + 0.05}, pinned_grid(), 1e-13).epsilon;
          r.matrix = matrix_eigenvalues_in(b, 0, pinned_grid(), eps - 0.5, eps + 0.5).at(0);
          return r;
        }
    return std::nullopt;
  };

  double worst = 0;
  std::ostringstream d;
  d.precision(6);
  for (double alpha : {1.0, std::sqrt(5.0)}) {
    const PhysicalParams base{1.0, 1.0, alpha, 1.0};
    PhysicalParams scaled{2.0, 3.0, 0.0, 1.0};
    scaled.alpha = alpha_for_beta(scaled, beta(base));
    auto r0 = pipeline(base);
    auto r1 = pipeline(scaled);
    if (!r0 || !r1) {
      o.fail("no QES point at beta " + std::to_string(beta(base)));
      continue;
    }
    if (r0->exact != r1->exact) o.fail("exact eps differs");
    worst = std::max({worst, std::abs(r0->numerov - r1->numerov), std::abs(r0->matrix - r1->matrix)});
    d << "; beta " << beta(base) << " (alpha' " << scaled.alpha << ") eps " << to_string(r0->exact);
  }
  if (worst >= 1e-12) o.fail("numerical eps differs by more than 1e-12");
  d.precision(3);
  d << "; max difference " << worst << " (tol 1e-12)";
  o.detail << d.str();
}

// 7. The naive rho0 expansion reproduces the constraint exactly; every root passes criterion 5.
void brute_force_cross_check(Outcome& o) {
  int count = 0;
  double worst = 0;
  for (int n = 3; n <= 4; ++n)
    for (int l = 0; l <= 2; ++l) {
      ConstraintPoly cp = constraint_polynomial(n, l);
      oracle::Substituted naive = oracle::constraint(n, l);
      if (naive.rho0_power != static_cast<int>(cp.rho0_factor) || RationalPoly(naive.beta_coefficients) != cp.poly)
        o.fail("constraint mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l));
      for (const auto& s : solve_qes(n, l)) {
        ++count;
        oracle_agrees(s, o, worst);
      }
    }
  std::ostringstream d;
  d.precision(3);
  d << "; n=3,4 l=0..2, " << count << " roots, worst difference " << worst << ", tol 1e-5";
  o.detail << d.str();
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // <= 0: no budget
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "integer beta law", 1.0, integer_beta_law},
      {2, "eigenvalue formulas", 1.0, energy_formulas},
      {3, "truncation correctness", 30.0, truncation_exact},
      {4, "naive truncation and series growth", 0.0, naive_truncation},
      {5, "numerical oracle agreement", 60.0, numerical_oracles},
      {6, "scale invariance", 0.0, scale_invariance},
      {7, "brute-force oracle cross-check", 0.0, brute_force_cross_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      std::ostringstream why;
      why << "over time budget " << c.budget_seconds << " s";
      o.fail(why.str());
    }
    std::string detail = o.detail.str();
    if (detail.rfind("; ", 0) == 0) detail.erase(0, 2);
    std::printf("%s criterion %d (%s) [%.3f s] %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, secs, detail.c_str());
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
