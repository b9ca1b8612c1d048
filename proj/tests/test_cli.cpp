#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// End-to-end tests driving the installed binary. CDA_CLI_PATH is injected
// by the build as the path of the freshly built executable.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CDA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Drops the one nondeterministic line of a JSON report.
std::string without_timing(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (contains(line, "\"timing_ms\"")) continue;
    out << line << "\n";
  }
  return out.str();
}

std::filesystem::path scratch_dir() {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "cda_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("counterexample command passes and shows the frozen witnesses") {
  const RunResult r = run_cli("counterexample");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"all_pass\": true"));
  CHECK(contains(r.output, "-2 x y x"));
  CHECK(contains(r.output, "\"index\": \"6\""));
}

TEST_CASE("verify-axioms: exit 0 on a valid structure, 1 on a refuted one") {
  const RunResult good = run_cli("verify-axioms --input builtin:counterexample");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.output, "\"all_pass\": true"));

  const RunResult bad = run_cli("verify-axioms --input builtin:matrix");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "\"all_pass\": false"));
  CHECK(contains(bad.output, "\"pass\": false"));
  // The report is still a complete JSON document.
  CHECK(bad.output.front() == '{');
}

TEST_CASE("text format renders PASS lines") {
  const RunResult r =
      run_cli("verify-axioms --input builtin:counterexample --format text");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[PASS]"));
  CHECK(contains(r.output, "ALL CHECKS PASSED"));
}

TEST_CASE("barcode emits plain interval lines") {
  const RunResult r = run_cli("barcode --scenario builtin:toy");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0 0 1\n0 0 1\n0 0 1\n0 0 inf\n1 1 2\n1 1 inf\n");

  const RunResult shifted =
      run_cli("barcode --scenario builtin:toy --curvature c1");
  CHECK(shifted.exit_code == 0);
  CHECK(contains(shifted.output, "1 1 23/10\n"));

  const RunResult one_dim =
      run_cli("barcode --scenario builtin:toy --dim 1");
  CHECK(one_dim.exit_code == 0);
  CHECK(one_dim.output == "1 1 2\n1 1 inf\n");
}

TEST_CASE("stability runs are deterministic up to timing") {
  const std::string args = "stability --scenario builtin:toy";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(contains(a.output, "\"delta\": \"3/10\""));
  CHECK(without_timing(a.output) == without_timing(b.output));
}

TEST_CASE("match reports pairs at a feasible tolerance") {
  const RunResult r =
      run_cli("match --scenario builtin:toy --c1 c0 --c2 c1 --eps 3/10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"pairs\""));
  CHECK(contains(r.output, "[1, 2) ~ [1, 23/10)"));
}

TEST_CASE("match exits 1 when no matching exists at the tolerance") {
  const RunResult r =
      run_cli("match --scenario builtin:toy --c1 c0 --c2 c1 --eps 1/10");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "\"all_pass\": false"));
}

TEST_CASE("ideal-check correctly refutes nilpotency of the ideal (x)") {
  const RunResult r = run_cli("ideal-check --input builtin:counterexample");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "x y x"));
}

TEST_CASE("bound verification demands the vanishing hypothesis") {
  const RunResult r = run_cli("bound4n2 --input builtin:central");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "error:"));

  const RunResult ok = run_cli("bound4n2 --input builtin:counterexample");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("normal-form and binomial agree with the operator iteration") {
  const RunResult nf = run_cli(
      "normal-form --input builtin:counterexample --k 5 --element y");
  CHECK(nf.exit_code == 0);
  CHECK(contains(nf.output, "\"all_pass\": true"));
  CHECK(contains(nf.output, "\"k\": \"5\""));

  const RunResult bn = run_cli(
      "binomial --input builtin:counterexample --r 2 --element y");
  CHECK(bn.exit_code == 0);
  CHECK(contains(bn.output, "\"all_pass\": true"));
}

TEST_CASE("nilpotency search over both operators") {
  const RunResult d = run_cli("nilpotency --input builtin:counterexample --op d");
  CHECK(d.exit_code == 0);
  CHECK(contains(d.output, "\"index\": \"6\""));

  const RunResult adc =
      run_cli("nilpotency --input builtin:counterexample --op ad_c");
  CHECK(adc.exit_code == 0);
  CHECK(contains(adc.output, "\"index\": \"3\""));
  CHECK(contains(adc.output, "-2 x y x"));
}

TEST_CASE("--out writes the report to a file instead of stdout") {
  const std::filesystem::path out = scratch_dir() / "report.json";
  std::filesystem::remove(out);
  const RunResult r = run_cli(
      "verify-axioms --input builtin:counterexample --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  REQUIRE(std::filesystem::exists(out));
  std::ifstream in(out);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(contains(content.str(), "\"all_pass\": true"));
  CHECK(content.str().front() == '{');
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("verify-axioms --no-such-flag").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  CHECK(run_cli("match --scenario builtin:toy").exit_code == 2);  // --eps
}

TEST_CASE("input errors exit with 2 and explain themselves") {
  const RunResult missing = run_cli("verify-axioms --input /no/such/file.json");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "error:"));

  const std::filesystem::path bad = scratch_dir() / "bad.json";
  {
    std::ofstream out(bad);
    out << "{ not json ]";
  }
  const RunResult malformed =
      run_cli("verify-axioms --input " + bad.string());
  CHECK(malformed.exit_code == 2);
  CHECK(contains(malformed.output, "error:"));

  const RunResult unknown_builtin =
      run_cli("verify-axioms --input builtin:nope");
  CHECK(unknown_builtin.exit_code == 2);
  CHECK(contains(unknown_builtin.output, "error:"));

  const RunResult bad_element = run_cli(
      "normal-form --input builtin:counterexample --k 2 --element 'y +'");
  CHECK(bad_element.exit_code == 2);
  CHECK(contains(bad_element.output, "error:"));
}

TEST_CASE("help and version") {
  const RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(contains(help.output, "counterexample"));
  CHECK(contains(help.output, "barcode"));

  const RunResult sub_help = run_cli("barcode --help");
  CHECK(sub_help.exit_code == 0);
  CHECK(contains(sub_help.output, "--curvature"));

  const RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(contains(version.output, "0.1.0"));
}
