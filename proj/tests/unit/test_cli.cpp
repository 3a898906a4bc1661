#include "cli.hpp"

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qes");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = qes::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
  int code;
};

// Set QES_UPDATE_GOLDEN=1 to rewrite the files after an intended format change.
const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"solve_n1_l2.csv", {"solve", "--n", "1", "--l", "2"}, 0},
      {"solve_n2_l0.csv", {"solve", "--n", "2", "--l", "0"}, 0},
      {"solve_n3_l0.json", {"solve", "--n", "3", "--l", "0", "--format", "json"}, 0},
      {"solve_n3_l0.csv", {"solve", "--n", "3", "--l", "0"}, 0},
      {"solve_n4_l1.json", {"solve", "--n", "4", "--l", "1", "--format", "json"}, 0},
      {"solve_n2_l1_units.csv", {"solve", "--n", "2", "--l", "1", "--mass", "2", "--omega", "3", "--hbar", "0.5"}, 0},
      {"spectrum_n1_l0.csv", {"spectrum", "--n-max", "1"}, 0},
      {"spectrum_n2_l1.csv", {"spectrum", "--n-max", "2", "--l-max", "1"}, 0},
      {"spectrum_n4_l2.json", {"spectrum", "--n-max", "4", "--l-max", "2", "--format", "json"}, 0},
      {"spectrum_n2_l0_units.csv", {"spectrum", "--n-max", "2", "--omega", "2"}, 0},
      {"wavefunction_n1_l0.csv", {"wavefunction", "--n", "1", "--l", "0", "--points", "1000"}, 0},
      {"wavefunction_n3_l1_root1.json",
       {"wavefunction", "--n", "3", "--l", "1", "--root-index", "1", "--points", "1000", "--x-max", "8", "--format",
        "json"},
       0},
      {"series_l0.csv", {"series", "--l", "0", "--beta", "2.3", "--epsilon", "2.0", "--terms", "200"}, 0},
      {"series_alpha.json",
       {"series", "--l", "1", "--alpha", "1.5", "--mass", "2", "--epsilon", "3.25", "--terms", "20", "--format",
        "json"},
       0},
      {"verify_n1_l0.csv", {"verify", "--n", "1", "--l", "0", "--tol", "1e-6"}, 0},
      {"verify_n2_l1.json", {"verify", "--n", "2", "--l", "1", "--tol", "1e-5", "--format", "json"}, 0},
      {"verify_n3_l0_fail.csv", {"verify", "--n", "3", "--l", "0", "--tol", "1e-9"}, 3},
  };
  return cases;
}

struct CleanEnv {
  CleanEnv() { unsetenv("QES_DEFAULT_GRID_STEP"); }
};

}  // namespace

TEST_CASE("golden outputs") {
  CleanEnv env;
  const fs::path dir = QES_GOLDEN_DIR;
  const bool update = std::getenv("QES_UPDATE_GOLDEN") != nullptr;
  for (const auto& gc : golden_cases()) {
    CAPTURE(gc.file);
    Run r = run_cli(gc.args);
    CHECK(r.code == gc.code);
    if (update) {
      std::ofstream(dir / gc.file, std::ios::binary) << r.out;
      continue;
    }
    REQUIRE(fs::exists(dir / gc.file));
    CHECK(r.out == slurp(dir / gc.file));
    CHECK(!r.out.empty());
    CHECK(r.out.back() == '\n');
  }
}

TEST_CASE("identical inputs give identical bytes") {
  CleanEnv env;
  Run a = run_cli({"spectrum", "--n-max", "5", "--l-max", "3"});
  Run b = run_cli({"spectrum", "--n-max", "5", "--l-max", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("solve values") {
  Run r = run_cli({"solve", "--n", "1", "--l", "2"});
  CHECK(r.out.find("\n1,2,0,3,3,3,true,1,9/2,") != std::string::npos);
  r = run_cli({"solve", "--n", "2", "--l", "0"});
  CHECK(r.out.find("\n2,0,0,5,5,5,true,1,7/2,") != std::string::npos);
  r = run_cli({"solve", "--n", "3", "--l", "0", "--format", "json"});
  CHECK(r.out.find("\"defining_polynomial\": [\n        \"18\",\n        \"-15\",\n        \"1\"") !=
        std::string::npos);
  // (15 - sqrt(153))/2 = 1.3153415615735091752678852160382...
  CHECK(r.out.find("\"beta_lower\": \"1.31534156157350917526788521603") != std::string::npos);
}

TEST_CASE("spectrum rows") {
  Run r = run_cli({"spectrum", "--n-max", "1"});
  CHECK(r.out == "n,l,root_index,beta,epsilon\n1,0,0,1,2.5\n");
  r = run_cli({"spectrum", "--n-max", "2", "--l-max", "1"});
  CHECK(r.out == "n,l,root_index,beta,epsilon\n1,0,0,1,2.5\n1,1,0,2,3.5\n2,0,0,5,3.5\n2,1,0,9,4.5\n");
}

TEST_CASE("spectrum n_max = 6 is fast") {
  auto t0 = std::chrono::steady_clock::now();
  Run r = run_cli({"spectrum", "--n-max", "6", "--l-max", "6"});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.code == 0);
  CHECK(secs < 10.0);
}

TEST_CASE("wavefunction n=1 l=0") {
  CleanEnv env;
  Run r = run_cli({"wavefunction", "--n", "1", "--l", "0", "--points", "1000"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,u,v");
  std::vector<double> u, v;
  while (std::getline(in, line)) {
    double x, uu, vv;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &uu, &vv) == 3);
    u.push_back(uu);
    v.push_back(vv);
  }
  CHECK(u.size() == 1001);
  CHECK(std::abs(u.front()) < 1e-5);
  int changes = 0;
  for (std::size_t i = 1; i < v.size(); ++i) changes += (v[i] < 0) != (v[i - 1] < 0);
  CHECK(changes == 1);
}

TEST_CASE("series ratio column") {
  Run r = run_cli({"series", "--l", "0", "--beta", "2.3", "--epsilon", "2.0", "--terms", "5"});
  CHECK(r.code == 0);
  // c_0 has no ratio or asymptote; the last row has no ratio
  CHECK(r.out.rfind("i,c_i,ratio,asymptote\n0,1,,\n", 0) == 0);
  CHECK(r.out.find("\n5,") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 6) == ",,0.1\n");
}

TEST_CASE("output file") {
  const fs::path path = fs::temp_directory_path() / "qes_cli_test_output.csv";
  fs::remove(path);
  Run r = run_cli({"spectrum", "--n-max", "1", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "n,l,root_index,beta,epsilon\n1,0,0,1,2.5\n");
  fs::remove(path);
}

TEST_CASE("usage errors exit 1") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"solve", "--n", "1"},
      {"solve", "--n", "0", "--l", "0"},
      {"solve", "--n", "1", "--l", "-1"},
      {"solve", "--n", "1", "--l", "0", "--format", "xml"},
      {"solve", "--n", "1", "--l", "0", "--mass", "-1"},
      {"spectrum", "--n-max", "0"},
      {"wavefunction", "--n", "3", "--l", "0"},
      {"wavefunction", "--n", "3", "--l", "0", "--root-index", "2"},
      {"wavefunction", "--n", "1", "--l", "0", "--root-index", "-1"},
      {"wavefunction", "--n", "1", "--l", "0", "--points", "10"},
      {"wavefunction", "--n", "1", "--l", "0", "--points", "2000", "--step", "0.001"},
      {"series", "--l", "0", "--epsilon", "2"},
      {"series", "--l", "0", "--beta", "1", "--alpha", "1", "--epsilon", "2"},
      {"series", "--l", "0", "--beta", "1", "--epsilon", "0"},
      {"series", "--l", "0", "--beta", "1", "--epsilon", "2", "--terms", "5000"},
      {"verify", "--n", "1", "--l", "0", "--tol", "0"},
      {"solve", "--n", "1", "--l", "0", "--output", "/nonexistent-dir/x.csv"},
  };
  for (const auto& args : bad) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    Run r = run_cli(args);
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
  }
}

TEST_CASE("help exits 0") {
  Run r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spectrum") != std::string::npos);
}

TEST_CASE("verification failure exits 3") {
  CleanEnv env;
  Run r = run_cli({"verify", "--n", "3", "--l", "0", "--tol", "1e-9"});
  CHECK(r.code == 3);
  CHECK(r.out.find("FAIL") != std::string::npos);
  r = run_cli({"verify", "--n", "1", "--l", "0", "--tol", "1e-6"});
  CHECK(r.code == 0);
  CHECK(r.out.find(",PASS\n") != std::string::npos);
}

TEST_CASE("grid step from the environment") {
  setenv("QES_DEFAULT_GRID_STEP", "0.002", 1);
  Run coarse = run_cli({"verify", "--n", "1", "--l", "0", "--tol", "1e-5"});
  setenv("QES_DEFAULT_GRID_STEP", "not-a-number", 1);
  Run broken = run_cli({"verify", "--n", "1", "--l", "0"});
  unsetenv("QES_DEFAULT_GRID_STEP");
  Run fine = run_cli({"verify", "--n", "1", "--l", "0", "--tol", "1e-5"});
  CHECK(coarse.code == 0);
  CHECK(coarse.out != fine.out);
  CHECK(broken.code == 1);
}

TEST_CASE("binary end to end") {
  const std::string bin = QES_CLI_BINARY;
  auto status = [&](const std::string& args) {
    int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("solve --n 1 --l 0") == 0);
  CHECK(status("solve --n 1") == 1);
  CHECK(status("wavefunction --n 2 --l 0 --root-index 3") == 1);
  CHECK(status("verify --n 3 --l 0 --tol 1e-9") == 3);
}
