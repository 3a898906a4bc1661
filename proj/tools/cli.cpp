#include "cli.hpp"

#include "qes/model.hpp"
#include "qes/recursion.hpp"
#include "qes/truncation.hpp"
#include "qes/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qes::cli {

namespace {

using nlohmann::ordered_json;

// Thrown for inconsistent option combinations that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kEnclosureDigits = 32;

struct Common {
  std::string format = "csv";
  std::string output;
  std::optional<double> mass, omega, hbar;

  bool lab_units() const { return mass || omega || hbar; }
  PhysicalParams units() const {
    PhysicalParams p;
    if (mass) p.mass = *mass;
    if (omega) p.omega = *omega;
    if (hbar) p.hbar = *hbar;
    p.validate();
    return p;
  }
};

void add_common(CLI::App* sub, Common& c, bool with_units) {
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output,-o", c.output, "write to this file instead of stdout");
  if (with_units) {
    sub->add_option("--mass", c.mass, "particle mass (default 1)");
    sub->add_option("--omega", c.omega, "oscillator frequency (default 1)");
    sub->add_option("--hbar", c.hbar, "reduced Planck constant (default 1)");
  }
}

// A flat table; cells are strings, numbers or null so that CSV and JSON agree.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<ordered_json>> rows;
};

std::string cell_text(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  return format_double(v.get<double>());
}

std::string render_csv(const Table& t) {
  std::string s;
  for (std::size_t k = 0; k < t.columns.size(); ++k) s += (k ? "," : "") + t.columns[k];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + cell_text(row[k]);
    s += '\n';
  }
  return s;
}

ordered_json table_json(const Table& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t k = 0; k < row.size(); ++k) obj[t.columns[k]] = row[k];
    arr.push_back(std::move(obj));
  }
  return arr;
}

std::string render(const Table& t, const std::string& format) {
  if (format == "json") return table_json(t).dump(2) + "\n";
  return render_csv(t);
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + c.output);
  f << text;
}

std::string beta_text(const RealRoot& r) { return r.exact ? qes::to_string(r.lower) : r.to_string(30); }

ordered_json double_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

// c_i as text: exact "p/q" (times rho0 for odd i) when beta is rational, else binary64.
std::vector<std::string> coefficient_texts(const QesSolution& sol) {
  std::vector<std::string> out;
  if (sol.beta.exact) {
    for (const auto& c : sol.coefficients) {
      std::string s = qes::to_string(c.value);
      if (c.rho0_power == Parity::odd && c.value != 0) s += "*rho0";
      out.push_back(std::move(s));
    }
  } else {
    for (double c : sol.float_coefficients()) out.push_back(format_double(c));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

std::vector<std::string> poly_texts(const RationalPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(qes::to_string(c));
  return out;
}

void check_n_l(int n, int l) {
  if (n < 1) throw UsageError("--n must be >= 1");
  if (l < 0) throw UsageError("--l must be >= 0");
}

RadialGrid grid_from(std::optional<double> step, std::optional<double> x_max, std::optional<int> points) {
  RadialGrid g = RadialGrid::standard();
  if (x_max) g.x_max = *x_max;
  if (step && points) throw UsageError("--step and --points are mutually exclusive");
  if (step) g.step = *step;
  if (points) {
    if (*points < 1) throw UsageError("--points must be positive");
    g.step = (g.x_max - g.x_min) / *points;
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return g;
}

// ---- solve ----

struct SolveArgs {
  Common common;
  int n = 1;
  int l = 0;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  check_n_l(a.n, a.l);
  const PhysicalParams units = a.common.units();
  ConstraintPoly cp = constraint_polynomial(a.n, a.l);
  std::vector<QesSolution> sols = solve_qes(a.n, a.l);

  Table t;
  t.columns = {"n",       "l",            "root_index",  "beta",         "beta_lower", "beta_upper",
               "exact",   "multiplicity", "epsilon",     "rho0_squared", "coefficients"};
  if (a.common.lab_units()) {
    t.columns.push_back("alpha");
    t.columns.push_back("energy");
  }
  ordered_json roots = ordered_json::array();
  for (std::size_t k = 0; k < sols.size(); ++k) {
    const QesSolution& s = sols[k];
    const RealRoot& r = s.beta;
    std::string lower = r.exact ? qes::to_string(r.lower) : to_decimal(r.lower, kEnclosureDigits);
    std::string upper = r.exact ? qes::to_string(r.upper) : to_decimal_ceil(r.upper, kEnclosureDigits);
    std::string rho0_sq = r.exact ? qes::to_string(s.rho0_squared) : format_double(to_double(s.rho0_squared));
    std::vector<std::string> coeffs = coefficient_texts(s);
    std::vector<ordered_json> row = {a.n, a.l, static_cast<int>(k), beta_text(r), lower, upper,
                                     r.exact, r.multiplicity, qes::to_string(s.epsilon), rho0_sq, join(coeffs, ";")};
    if (a.common.lab_units()) {
      row.emplace_back(alpha_for_beta(units, r.value()));
      row.emplace_back(to_double(s.epsilon) * units.hbar * units.omega);
    }

    ordered_json obj = ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
    obj["coefficients"] = coeffs;
    obj["defining_polynomial"] = poly_texts(r.factor);
    roots.push_back(std::move(obj));
    t.rows.push_back(std::move(row));
  }

  std::string text;
  if (a.common.format == "json") {
    ordered_json doc = ordered_json::object();
    doc["n"] = a.n;
    doc["l"] = a.l;
    doc["epsilon"] = qes::to_string(general_energy(a.n, a.l));
    doc["constraint"] = {{"rho0_factor", static_cast<int>(cp.rho0_factor)},
                         {"coefficients", poly_texts(cp.poly)},
                         {"polynomial", cp.poly.to_string("beta")}};
    doc["roots"] = std::move(roots);
    text = doc.dump(2) + "\n";
  } else {
    text = render_csv(t);
  }
  emit(text, a.common, out);
  if (sols.empty()) {
    err << "no positive root of the constraint for n=" << a.n << ", l=" << a.l << "\n";
    return kNoRoot;
  }
  return kOk;
}

// ---- spectrum ----

struct SpectrumArgs {
  Common common;
  int n_max = 1;
  int l_max = 0;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream&) {
  if (a.n_max < 1) throw UsageError("--n-max must be >= 1");
  if (a.l_max < 0) throw UsageError("--l-max must be >= 0");
  const PhysicalParams units = a.common.units();

  // One task per (n, l) cell; collected in launch order so the output is deterministic.
  std::vector<std::future<std::vector<QesSolution>>> cells;
  for (int n = 1; n <= a.n_max; ++n)
    for (int l = 0; l <= a.l_max; ++l) cells.push_back(std::async(std::launch::async, solve_qes, n, l));

  Table t;
  t.columns = {"n", "l", "root_index", "beta", "epsilon"};
  if (a.common.lab_units()) {
    t.columns.push_back("alpha");
    t.columns.push_back("energy");
  }
  for (auto& cell : cells) {
    std::vector<QesSolution> sols = cell.get();
    for (std::size_t k = 0; k < sols.size(); ++k) {
      const QesSolution& s = sols[k];
      double eps = to_double(s.epsilon);
      std::vector<ordered_json> row = {s.n, s.l, static_cast<int>(k), beta_text(s.beta), eps};
      if (a.common.lab_units()) {
        row.emplace_back(alpha_for_beta(units, s.beta_value()));
        row.emplace_back(eps * units.hbar * units.omega);
      }
      t.rows.push_back(std::move(row));
    }
  }
  emit(render(t, a.common.format), a.common, out);
  return kOk;
}

// ---- wavefunction ----

struct WavefunctionArgs {
  Common common;
  int n = 1;
  int l = 0;
  std::optional<int> root_index;
  std::optional<int> points;
  std::optional<double> step;
  std::optional<double> x_max;
};

int cmd_wavefunction(const WavefunctionArgs& a, std::ostream& out, std::ostream& err) {
  check_n_l(a.n, a.l);
  RadialGrid grid = grid_from(a.step, a.x_max, a.points);
  std::vector<QesSolution> sols = solve_qes(a.n, a.l);
  if (sols.empty()) {
    err << "no positive root of the constraint for n=" << a.n << ", l=" << a.l << "\n";
    return kNoRoot;
  }
  int idx = 0;
  if (a.root_index) {
    idx = *a.root_index;
  } else if (sols.size() > 1) {
    throw UsageError("--root-index is required: " + std::to_string(sols.size()) + " roots exist");
  }
  if (idx < 0 || idx >= static_cast<int>(sols.size()))
    throw UsageError("--root-index out of range (0.." + std::to_string(sols.size() - 1) + ")");

  WavefunctionTable wf = eval_wavefunction(sols[static_cast<std::size_t>(idx)], grid);
  Table t;
  t.columns = {"x", "u", "v"};
  t.rows.reserve(wf.rows.size());
  for (const auto& r : wf.rows) t.rows.push_back({r.x, r.u, r.v});
  emit(render(t, a.common.format), a.common, out);
  return kOk;
}

// ---- series ----

struct SeriesArgs {
  Common common;
  int l = 0;
  std::optional<double> beta;
  std::optional<double> alpha;
  double epsilon = 0.0;
  int terms = 200;
};

int cmd_series(const SeriesArgs& a, std::ostream& out, std::ostream&) {
  if (a.l < 0) throw UsageError("--l must be >= 0");
  if (a.beta.has_value() == a.alpha.has_value()) throw UsageError("give exactly one of --beta and --alpha");
  if (!(a.epsilon > 0)) throw UsageError("--epsilon must be positive");
  if (a.terms < 1 || a.terms > kMaxFloatTerms)
    throw UsageError("--terms must lie in 1.." + std::to_string(kMaxFloatTerms));
  double beta_value = 0;
  if (a.beta) {
    beta_value = *a.beta;
  } else {
    PhysicalParams p = a.common.units();
    p.alpha = *a.alpha;
    p.validate();
    beta_value = qes::beta(p);
  }
  if (!(beta_value >= 0)) throw UsageError("--beta must be >= 0");

  DimensionlessParams dp = params_at(a.l, beta_value, a.epsilon);
  SeriesTail st = coefficients_float(dp, a.terms);
  Table t;
  t.columns = {"i", "c_i", "ratio", "asymptote"};
  for (int i = 0; i <= a.terms; ++i) {
    ordered_json ratio = nullptr;
    if (i >= 1 && i < a.terms && st.coefficients[static_cast<std::size_t>(i - 1)] != 0.0)
      ratio = double_or_null(tail_ratio(st, i));
    ordered_json asym = i >= 1 ? ordered_json(tail_asymptote(dp.rho1(), i)) : ordered_json(nullptr);
    t.rows.push_back({i, double_or_null(st.coefficients[static_cast<std::size_t>(i)]), ratio, asym});
  }
  emit(render(t, a.common.format), a.common, out);
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  Common common;
  int n = 1;
  int l = 0;
  double tol = 1e-6;
  std::optional<double> step;
  std::optional<double> x_max;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  check_n_l(a.n, a.l);
  if (!(a.tol > 0)) throw UsageError("--tol must be positive");
  const PhysicalParams units = a.common.units();
  RadialGrid grid = grid_from(a.step, a.x_max, std::nullopt);
  std::vector<QesSolution> sols = solve_qes(a.n, a.l);
  if (sols.empty()) {
    err << "no positive root of the constraint for n=" << a.n << ", l=" << a.l << "\n";
    return kNoRoot;
  }

  Table t;
  t.columns = {"n",          "l",       "root_index",   "beta",         "epsilon", "numerov",
               "matrix",     "nodes",   "delta_numerov", "delta_matrix", "tol",     "status"};
  if (a.common.lab_units()) t.columns.push_back("energy");
  bool all_passed = true;
  for (std::size_t k = 0; k < sols.size(); ++k) {
    const QesSolution& s = sols[k];
    OracleCheck c = check_solution(s, grid, a.tol);
    all_passed = all_passed && c.passed;
    std::vector<ordered_json> row = {a.n,
                                     a.l,
                                     static_cast<int>(k),
                                     beta_text(s.beta),
                                     qes::to_string(s.epsilon),
                                     double_or_null(c.numerov),
                                     double_or_null(c.matrix),
                                     c.numerov_nodes,
                                     double_or_null(std::abs(c.numerov - c.target)),
                                     double_or_null(std::abs(c.matrix - c.target)),
                                     a.tol,
                                     c.passed ? "PASS" : "FAIL"};
    if (a.common.lab_units()) row.emplace_back(c.target * units.hbar * units.omega);
    t.rows.push_back(std::move(row));
  }
  emit(render(t, a.common.format), a.common, out);
  if (!all_passed) {
    err << "verification failed at tol " << format_double(a.tol) << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form bound states of the Coulomb plus harmonic oscillator potential", "qes"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "roots of the truncation constraint with exact coefficients");
  s->add_option("--n", solve.n, "polynomial degree")->required();
  s->add_option("--l", solve.l, "angular momentum")->required();
  add_common(s, solve.common, true);

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "all truncation points for n <= n_max, l <= l_max");
  sp->add_option("--n-max", spectrum.n_max)->required();
  sp->add_option("--l-max", spectrum.l_max, "default 0");
  add_common(sp, spectrum.common, true);

  WavefunctionArgs wave;
  auto* w = app.add_subcommand("wavefunction", "normalized u(x) and v on the radial grid");
  w->add_option("--n", wave.n)->required();
  w->add_option("--l", wave.l)->required();
  w->add_option("--root-index", wave.root_index, "required when several roots exist");
  w->add_option("--points", wave.points, "grid intervals");
  w->add_option("--step", wave.step);
  w->add_option("--x-max", wave.x_max);
  add_common(w, wave.common, false);

  SeriesArgs series;
  auto* se = app.add_subcommand("series", "coefficient growth away from a truncation point");
  se->add_option("--l", series.l)->required();
  se->add_option("--beta", series.beta);
  se->add_option("--alpha", series.alpha, "Coulomb strength, with the unit flags");
  se->add_option("--epsilon", series.epsilon, "E / (hbar omega)")->required();
  se->add_option("--terms", series.terms, "default 200");
  add_common(se, series.common, true);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "compare analytic energies with the numerical oracles");
  v->add_option("--n", verify.n)->required();
  v->add_option("--l", verify.l)->required();
  v->add_option("--tol", verify.tol, "default 1e-6");
  v->add_option("--step", verify.step);
  v->add_option("--x-max", verify.x_max);
  add_common(v, verify.common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (sp->parsed()) return cmd_spectrum(spectrum, out, err);
    if (w->parsed()) return cmd_wavefunction(wave, out, err);
    if (se->parsed()) return cmd_series(series, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NoEigenvalueInBracket& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const SolverFailure& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace qes::cli
