#include "qes/model.hpp"
#include "qes/recursion.hpp"
#include "qes/truncation.hpp"
#include "qes/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

std::vector<std::string> texts(const qes::RationalPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(qes::to_string(c));
  return out;
}

py::dict solution_dict(const qes::QesSolution& s) {
  py::dict d;
  d["n"] = s.n;
  d["l"] = s.l;
  d["beta"] = s.beta_value();
  d["beta_exact"] = s.beta.exact ? py::object(py::str(qes::to_string(s.beta.lower))) : py::object(py::none());
  d["beta_lower"] = qes::to_string(s.beta.lower);
  d["beta_upper"] = qes::to_string(s.beta.upper);
  d["defining_polynomial"] = texts(s.beta.factor);
  d["epsilon"] = qes::to_string(s.epsilon);
  d["rho0"] = s.rho0();
  d["rho1"] = s.rho1();
  d["coefficients"] = s.float_coefficients();
  return d;
}

std::vector<qes::QesSolution> solve_checked(int n, int l) {
  if (n < 1 || l < 0) throw py::value_error("need n >= 1 and l >= 0");
  return qes::solve_qes(n, l);
}

const qes::QesSolution& pick(const std::vector<qes::QesSolution>& sols, int root_index) {
  if (root_index < 0 || root_index >= static_cast<int>(sols.size())) throw py::index_error("root_index out of range");
  return sols[static_cast<std::size_t>(root_index)];
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form bound states of the Coulomb plus harmonic oscillator potential";

  m.def(
      "constraint",
      [](int n, int l) {
        if (n < 1 || l < 0) throw py::value_error("need n >= 1 and l >= 0");
        auto cp = qes::constraint_polynomial(n, l);
        py::dict d;
        d["rho0_factor"] = static_cast<int>(cp.rho0_factor);
        d["coefficients"] = texts(cp.poly);
        d["polynomial"] = cp.poly.to_string("beta");
        return d;
      },
      py::arg("n"), py::arg("l"), "Constraint polynomial in beta, ascending exact coefficients.");

  m.def(
      "solve",
      [](int n, int l) {
        py::list out;
        for (const auto& s : solve_checked(n, l)) out.append(solution_dict(s));
        return out;
      },
      py::arg("n"), py::arg("l"), "All positive truncation roots with their energies and coefficients.");

  m.def(
      "general_energy", [](int n, int l) { return qes::to_string(qes::general_energy(n, l)); }, py::arg("n"),
      py::arg("l"));

  m.def(
      "series",
      [](int l, double beta, double epsilon, int terms) {
        auto dp = qes::params_at(l, beta, epsilon);
        return qes::coefficients_float(dp, terms).coefficients;
      },
      py::arg("l"), py::arg("beta"), py::arg("epsilon"), py::arg("terms") = 200,
      "Floating series coefficients c_0..c_terms at an arbitrary energy.");

  m.def(
      "wavefunction",
      [](int n, int l, int root_index, double x_max, double step) {
        auto sols = solve_checked(n, l);
        qes::RadialGrid grid{1e-6, x_max, step};
        grid.validate();
        auto wf = qes::eval_wavefunction(pick(sols, root_index), grid);
        std::vector<double> x, u, v;
        for (const auto& r : wf.rows) {
          x.push_back(r.x);
          u.push_back(r.u);
          v.push_back(r.v);
        }
        return py::make_tuple(x, u, v);
      },
      py::arg("n"), py::arg("l"), py::arg("root_index") = 0, py::arg("x_max") = 10.0, py::arg("step") = 1e-3,
      "Normalized u(x) and v sampled on a uniform grid, as (x, u, v).");

  m.def(
      "check",
      [](int n, int l, int root_index, double tol, double step) {
        auto sols = solve_checked(n, l);
        qes::RadialGrid grid{1e-6, 10.0, step};
        grid.validate();
        auto c = qes::check_solution(pick(sols, root_index), grid, tol);
        py::dict d;
        d["target"] = c.target;
        d["numerov"] = c.numerov;
        d["matrix"] = c.matrix;
        d["nodes"] = c.numerov_nodes;
        d["passed"] = c.passed;
        return d;
      },
      py::arg("n"), py::arg("l"), py::arg("root_index") = 0, py::arg("tol") = 1e-6, py::arg("step") = 1e-3,
      "Compare the closed-form energy with Numerov shooting and the finite-difference matrix.");

  m.def(
      "beta_of",
      [](double mass, double omega, double alpha, double hbar) {
        qes::PhysicalParams p{mass, omega, alpha, hbar};
        p.validate();
        return qes::beta(p);
      },
      py::arg("mass") = 1.0, py::arg("omega") = 1.0, py::arg("alpha") = 0.0, py::arg("hbar") = 1.0);

  py::register_exception<qes::NoEigenvalueInBracket>(m, "NoEigenvalueInBracket", PyExc_ValueError);
  py::register_exception<qes::SolverFailure>(m, "SolverFailure", PyExc_RuntimeError);
}
