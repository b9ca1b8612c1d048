// Command-line front end: loads presentations, curved structures and
// filtration scenarios from JSON (or the built-in fixtures), runs the
// requested verification, and emits a deterministic report (JSON or text)
// or a barcode file.
//
// Exit codes: 0 = everything requested passed; 1 = a verification ran and
// failed (the report is still emitted); 2 = input or usage errors.

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cda/barcode.hpp"
#include "cda/bottleneck.hpp"
#include "cda/cdga.hpp"
#include "cda/checks.hpp"
#include "cda/element.hpp"
#include "cda/errors.hpp"
#include "cda/fixtures.hpp"
#include "cda/io.hpp"
#include "cda/report.hpp"
#include "cda/stability.hpp"
#include "cda/version.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct GlobalOptions {
  std::string format = "json";
  std::string out;
  int max_word_len = 3;
  int guard = 32;
  int max_power = 10;
};

cda::RewriteConfig make_config(const GlobalOptions& g) {
  cda::RewriteConfig cfg;
  cfg.max_word_len = g.guard;
  return cfg;
}

// Inputs are either file paths or "builtin:<name>" tokens.
cda::CurvedDGA load_cdga(const std::string& token,
                         const cda::RewriteConfig& cfg) {
  if (token == "builtin:counterexample") return cda::builtin_counterexample(cfg);
  if (token == "builtin:matrix") return cda::builtin_matrix(cfg);
  if (token == "builtin:central") return cda::builtin_central(cfg);
  if (token.rfind("builtin:", 0) == 0) {
    throw cda::ParseError("unknown builtin input '" + token +
                          "' (expected builtin:counterexample, "
                          "builtin:matrix or builtin:central)");
  }
  const std::filesystem::path path(token);
  return cda::cdga_from_json(cda::load_json_file(path), cfg,
                             path.parent_path());
}

cda::Scenario load_scenario(const std::string& token,
                            const cda::RewriteConfig& cfg) {
  if (token == "builtin:toy") return cda::builtin_toy_scenario(cfg);
  if (token.rfind("builtin:", 0) == 0) {
    throw cda::ParseError("unknown builtin scenario '" + token +
                          "' (expected builtin:toy)");
  }
  const std::filesystem::path path(token);
  return cda::scenario_from_json(cda::load_json_file(path), cfg,
                                 path.parent_path());
}

void emit(const std::string& text, const GlobalOptions& g) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) {
    throw cda::ParseError("cannot open output file '" + g.out + "'");
  }
  out << text;
}

// Stamps timing/version, emits the report, and maps pass/fail to the exit
// code contract.
int finish(cda::RunReport& report, const GlobalOptions& g,
           Clock::time_point start) {
  report.timing_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report.version = cda::kVersion;
  emit(cda::render_report(report, g.format), g);
  return report.all_pass() ? 0 : 1;
}

std::string bar_to_string(const cda::Bar& b) {
  std::string s = "[" + cda::to_string(b.birth) + ", ";
  s += b.death.has_value() ? cda::to_string(*b.death) : "inf";
  s += ")";
  return s;
}

cda::RunReport make_report(const std::string& command,
                           const GlobalOptions& g) {
  cda::RunReport r;
  r.command = command;
  r.parameters["max_word_len"] = g.max_word_len;
  r.parameters["guard"] = g.guard;
  return r;
}

int run_verify_axioms(const GlobalOptions& g, const std::string& input) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::CurvedDGA dga = load_cdga(input, cfg);
  const cda::TestSet ts =
      cda::spanning_test_set(dga.presentation, g.max_word_len);

  cda::RunReport report = make_report("verify-axioms", g);
  report.parameters["input"] = input;
  report.parameters["test_set_size"] = ts.elements.size();
  report.results = cda::check_cda_axioms(dga, ts).to_report().claims;
  return finish(report, g, t0);
}

int run_normal_form(const GlobalOptions& g, const std::string& input, int k,
                    const std::string& element_text) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::CurvedDGA dga = load_cdga(input, cfg);
  const cda::TestSet ts =
      cda::spanning_test_set(dga.presentation, g.max_word_len);

  std::vector<cda::Element> probes = ts.elements;
  if (!element_text.empty()) {
    probes.push_back(cda::parse_element(element_text, dga.presentation));
  }

  cda::ClaimResult claim;
  claim.claim =
      "d^k agrees with its factored form ((ad_c)^m, or (ad_c)^m after d) on "
      "every probe";
  claim.parameters = {{"k", std::to_string(k)},
                      {"probes", std::to_string(probes.size())}};
  claim.pass = true;
  for (const cda::Element& a : probes) {
    if (cda::iterate_d(dga, k, a) != cda::normal_form_power(dga, k, a)) {
      claim.pass = false;
      claim.witness = a;
      break;
    }
  }

  cda::RunReport report = make_report("normal-form", g);
  report.parameters["input"] = input;
  report.parameters["k"] = k;
  if (!element_text.empty()) report.parameters["element"] = element_text;
  report.results.push_back(std::move(claim));
  return finish(report, g, t0);
}

int run_binomial(const GlobalOptions& g, const std::string& input, int r,
                 const std::string& element_text) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::CurvedDGA dga = load_cdga(input, cfg);
  const cda::TestSet ts =
      cda::spanning_test_set(dga.presentation, g.max_word_len);

  std::vector<cda::Element> probes = ts.elements;
  if (!element_text.empty()) {
    probes.push_back(cda::parse_element(element_text, dga.presentation));
  }

  const cda::LinearOperator adc_r =
      cda::LinearOperator::power(dga.ad_c(), r);

  cda::ClaimResult claim;
  claim.claim =
      "(ad_c)^r agrees with its alternating binomial expansion "
      "sum_j (-1)^j C(r,j) c^(r-j) a c^j on every probe";
  claim.parameters = {{"r", std::to_string(r)},
                      {"probes", std::to_string(probes.size())}};
  claim.pass = true;
  for (const cda::Element& a : probes) {
    if (adc_r.apply(a) != cda::binomial_ad_power(dga.curvature, r, a)) {
      claim.pass = false;
      claim.witness = a;
      break;
    }
  }

  cda::RunReport report = make_report("binomial", g);
  report.parameters["input"] = input;
  report.parameters["r"] = r;
  if (!element_text.empty()) report.parameters["element"] = element_text;
  report.results.push_back(std::move(claim));
  return finish(report, g, t0);
}

int run_nilpotency(const GlobalOptions& g, const std::string& input,
                   const std::string& op_name, int max_k) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::CurvedDGA dga = load_cdga(input, cfg);
  const cda::TestSet ts =
      cda::spanning_test_set(dga.presentation, g.max_word_len);

  const cda::LinearOperator op = op_name == "d" ? dga.d : dga.ad_c();
  const cda::NilpotencyResult res = cda::nilpotency_index(op, ts, max_k);

  cda::ClaimResult claim;
  claim.claim = "some power of the operator vanishes on the whole test set";
  claim.parameters = {{"operator", op_name},
                      {"max_k", std::to_string(max_k)}};
  if (res.index.has_value()) {
    claim.pass = true;
    claim.parameters.emplace_back("index", std::to_string(*res.index));
    if (res.witness.has_value()) {
      claim.parameters.emplace_back("witness_input",
                                    cda::to_expression_string(*res.witness));
    }
    // The witness shown is the nonzero (index-1)-fold image: proof the
    // index is minimal.
    claim.witness = res.witness_image;
  } else {
    claim.pass = false;
    claim.parameters.emplace_back("index",
                                  "none <= " + std::to_string(max_k));
  }

  cda::RunReport report = make_report("nilpotency", g);
  report.parameters["input"] = input;
  report.parameters["operator"] = op_name;
  report.parameters["max_k"] = max_k;
  report.results.push_back(std::move(claim));
  return finish(report, g, t0);
}

int run_bound4n2(const GlobalOptions& g, const std::string& input, int n) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::CurvedDGA dga = load_cdga(input, cfg);
  const cda::TestSet ts =
      cda::spanning_test_set(dga.presentation, g.max_word_len);

  cda::RunReport report = make_report("bound4n2", g);
  report.parameters["input"] = input;
  report.parameters["n"] = n;
  report.results = cda::verify_bound_4n_minus_2(dga, n, ts).to_report().claims;
  return finish(report, g, t0);
}

int run_ideal_check(const GlobalOptions& g, const std::string& input, int n) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::CurvedDGA dga = load_cdga(input, cfg);
  const cda::TestSet ts =
      cda::spanning_test_set(dga.presentation, g.max_word_len);

  const cda::IdealNilpotencyReport rep = cda::check_curvature_ideal_nilpotent(
      dga.presentation, dga.curvature, n, ts);

  cda::RunReport report = make_report("ideal-check", g);
  report.parameters["input"] = input;
  report.parameters["n"] = n;
  report.results = rep.to_report().claims;

  if (rep.ideal_power_zero) {
    // The operator consequence of a nilpotent curvature ideal: d^(2n) = 0.
    cda::ClaimResult claim;
    claim.claim = "d^(2n) = 0 on test set";
    claim.parameters = {{"n", std::to_string(n)},
                        {"power", std::to_string(2 * n)}};
    claim.pass = true;
    for (const cda::Element& a : ts.elements) {
      if (!cda::iterate_d(dga, 2 * n, a).is_zero()) {
        claim.pass = false;
        claim.witness = a;
        break;
      }
    }
    report.results.push_back(std::move(claim));
  }
  return finish(report, g, t0);
}

int run_counterexample(const GlobalOptions& g) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::CurvedDGA dga = cda::builtin_counterexample(cfg);
  const cda::PresentationPtr& p = dga.presentation;
  const cda::TestSet ts = cda::spanning_test_set(p, g.max_word_len);

  cda::RunReport report = make_report("counterexample", g);
  report.parameters["input"] = "builtin:counterexample";
  report.parameters["test_set_size"] = ts.elements.size();
  report.results = cda::check_cda_axioms(dga, ts).to_report().claims;

  const cda::Element y = cda::parse_element("y", p);

  const auto expect = [&](const std::string& text, int k,
                          const std::string& expected_text) {
    cda::ClaimResult claim;
    claim.claim = text;
    const cda::Element got = cda::iterate_d(dga, k, y);
    const cda::Element expected = cda::parse_element(expected_text, p);
    claim.pass = got == expected;
    claim.parameters = {{"computed", cda::to_expression_string(got)}};
    if (!claim.pass) claim.witness = got;
    report.results.push_back(std::move(claim));
  };
  expect("d^2(y) = x y - y x", 2, "x y - y x");
  expect("d^4(y) = -2 x y x", 4, "-2 x y x");

  {
    cda::ClaimResult claim;
    claim.claim = "d^4(y) != 0 and d^5(y) != 0 (the bound is sharp here)";
    const cda::Element d4 = cda::iterate_d(dga, 4, y);
    const cda::Element d5 = cda::iterate_d(dga, 5, y);
    claim.pass = !d4.is_zero() && !d5.is_zero();
    claim.parameters = {{"d5_y", cda::to_expression_string(d5)}};
    report.results.push_back(std::move(claim));
  }

  {
    const cda::NilpotencyResult res =
        cda::nilpotency_index(dga.d, ts, g.max_power);
    cda::ClaimResult claim;
    claim.claim = "nilpotency index of d is exactly 6";
    claim.pass = res.index == 6;
    claim.parameters = {
        {"index", res.index ? std::to_string(*res.index)
                            : "none <= " + std::to_string(g.max_power)}};
    claim.witness = res.witness_image;
    report.results.push_back(std::move(claim));
  }
  {
    const cda::NilpotencyResult res =
        cda::nilpotency_index(dga.ad_c(), ts, g.max_power);
    cda::ClaimResult claim;
    claim.claim = "nilpotency index of ad_c is exactly 3";
    claim.pass = res.index == 3;
    claim.parameters = {
        {"index", res.index ? std::to_string(*res.index)
                            : "none <= " + std::to_string(g.max_power)}};
    claim.witness = res.witness_image;
    report.results.push_back(std::move(claim));
  }

  for (cda::ClaimResult& claim :
       cda::verify_bound_4n_minus_2(dga, 2, ts).to_report().claims) {
    report.results.push_back(std::move(claim));
  }

  return finish(report, g, t0);
}

int run_barcode(const GlobalOptions& g, const std::string& scenario_token,
                const std::string& curvature_name, int dim) {
  const cda::RewriteConfig cfg = make_config(g);
  const cda::Scenario sc = load_scenario(scenario_token, cfg);
  const cda::Element& c = sc.curvature(curvature_name);
  const cda::Filtration f = cda::curvature_filtration(sc.complex,
                                                      sc.filtration, c);
  cda::Barcode barcode = cda::compute_barcode(sc.complex, f);
  if (dim >= 0) {
    barcode.bars = barcode.in_dim(dim);
  }
  emit(cda::barcode_to_text(barcode), g);
  return 0;
}

int run_stability(const GlobalOptions& g, const std::string& scenario_token,
                  const std::string& c1_name, const std::string& c2_name) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::Scenario sc = load_scenario(scenario_token, cfg);

  const cda::StabilityReport rep = cda::verify_stability(
      sc.complex, sc.filtration, sc.curvature(c1_name),
      sc.curvature(c2_name));

  cda::RunReport report = make_report("stability", g);
  report.parameters["scenario"] = scenario_token;
  report.parameters["c1"] = c1_name;
  report.parameters["c2"] = c2_name;
  report.results = rep.to_report().claims;
  return finish(report, g, t0);
}

int run_match(const GlobalOptions& g, const std::string& scenario_token,
              const std::string& c1_name, const std::string& c2_name,
              const std::string& eps_text, int dim) {
  const auto t0 = Clock::now();
  const cda::RewriteConfig cfg = make_config(g);
  const cda::Scenario sc = load_scenario(scenario_token, cfg);
  const cda::Rational eps = cda::parse_rational(eps_text);

  const auto barcode_for = [&](const std::string& name) {
    const cda::Filtration f = cda::curvature_filtration(
        sc.complex, sc.filtration, sc.curvature(name));
    return cda::compute_barcode(sc.complex, f);
  };
  const cda::Barcode b1 = barcode_for(c1_name);
  const cda::Barcode b2 = barcode_for(c2_name);
  const cda::BarMatching m = cda::match_bars(b1, b2, eps, dim);

  cda::ClaimResult claim;
  claim.claim = "a bar matching of max cost <= eps exists";
  claim.pass = m.feasible;
  claim.parameters = {{"eps", eps_text}, {"dim", std::to_string(dim)}};
  if (m.feasible) {
    std::string pairs;
    for (const auto& [a, b] : m.pairs) {
      if (!pairs.empty()) pairs += "; ";
      pairs += bar_to_string(a) + " ~ " + bar_to_string(b);
    }
    claim.parameters.emplace_back("pairs",
                                  pairs.empty() ? "(none)" : pairs);
    std::string dropped;
    for (const auto& [bar, side] : m.unmatched) {
      if (!dropped.empty()) dropped += "; ";
      dropped += bar_to_string(bar) + " (side " + std::to_string(side) + ")";
    }
    claim.parameters.emplace_back("to_diagonal",
                                  dropped.empty() ? "(none)" : dropped);
  }

  cda::RunReport report = make_report("match", g);
  report.parameters["scenario"] = scenario_token;
  report.parameters["c1"] = c1_name;
  report.parameters["c2"] = c2_name;
  report.parameters["eps"] = eps_text;
  report.parameters["dim"] = dim;
  report.results.push_back(std::move(claim));
  return finish(report, g, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of curved differential structures on finitely "
      "presented graded algebras, and persistence-based comparison of the "
      "filtrations their curvature induces."};
  app.require_subcommand(1);
  app.set_version_flag("--version", cda::kVersion);

  GlobalOptions g;
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out,
                 "Write the report (or barcode) to this file instead of "
                 "stdout");
  app.add_option("--max-word-len", g.max_word_len,
                 "Word length of the probe basis used by every 'on the test "
                 "set' check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--guard", g.guard,
                 "Longest intermediate word the rewriter accepts before "
                 "aborting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-power", g.max_power,
                 "Default cap for nilpotency-index searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  const std::string input_help =
      "Curved-structure JSON file, or builtin:counterexample | "
      "builtin:matrix | builtin:central";
  const std::string scenario_help =
      "Scenario JSON file, or builtin:toy";

  auto* sc_axioms = app.add_subcommand(
      "verify-axioms",
      "Check the defining identities d^2 = ad_c and d(c) = 0 plus the "
      "degree conditions");
  std::string axioms_input = "builtin:counterexample";
  sc_axioms->add_option("--input", axioms_input, input_help)
      ->capture_default_str();

  auto* sc_nf = app.add_subcommand(
      "normal-form",
      "Check that the k-fold iterate of d equals its factored closed form");
  std::string nf_input = "builtin:counterexample";
  int nf_k = 4;
  std::string nf_element;
  sc_nf->add_option("--input", nf_input, input_help)->capture_default_str();
  sc_nf->add_option("--k", nf_k, "Iterate to check")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sc_nf->add_option("--element", nf_element,
                    "Also probe this element (expression syntax, e.g. "
                    "\"2 x y - 1/3 theta\")");

  auto* sc_binom = app.add_subcommand(
      "binomial",
      "Check (ad_c)^r against its alternating binomial expansion");
  std::string binom_input = "builtin:counterexample";
  int binom_r = 2;
  std::string binom_element;
  sc_binom->add_option("--input", binom_input, input_help)
      ->capture_default_str();
  sc_binom->add_option("--r", binom_r, "Power of ad_c to expand")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sc_binom->add_option("--element", binom_element,
                       "Also probe this element (expression syntax)");

  auto* sc_nil = app.add_subcommand(
      "nilpotency",
      "Find the smallest k with op^k = 0 on the test set");
  std::string nil_input = "builtin:counterexample";
  std::string nil_op = "d";
  int nil_max_k = 0;
  sc_nil->add_option("--input", nil_input, input_help)->capture_default_str();
  sc_nil->add_option("--op", nil_op, "Operator to probe")
      ->check(CLI::IsMember({"d", "ad_c"}))
      ->capture_default_str();
  sc_nil->add_option("--max-k", nil_max_k,
                     "Search cap (defaults to --max-power)")
      ->check(CLI::PositiveNumber);

  auto* sc_bound = app.add_subcommand(
      "bound4n2",
      "Assuming c^n = 0, verify (ad_c)^(2n-1) = 0 and d^(4n-2) = 0, and "
      "probe sharpness at d^(4n-3)");
  std::string bound_input = "builtin:counterexample";
  int bound_n = 2;
  sc_bound->add_option("--input", bound_input, input_help)
      ->capture_default_str();
  sc_bound->add_option("--n", bound_n, "Nilpotency order of c")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* sc_ideal = app.add_subcommand(
      "ideal-check",
      "Check whether the two-sided ideal generated by c has (c)^n = 0, and "
      "confirm the operator consequences");
  std::string ideal_input = "builtin:counterexample";
  int ideal_n = 2;
  sc_ideal->add_option("--input", ideal_input, input_help)
      ->capture_default_str();
  sc_ideal->add_option("--n", ideal_n, "Ideal power to test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  app.add_subcommand(
      "counterexample",
      "Zero-config headline run on the built-in two-periodic example: "
      "axioms, d^2(y), d^4(y) = -2 x y x, sharpness, nilpotency indices, "
      "and the n = 2 bounds");

  auto* sc_barcode = app.add_subcommand(
      "barcode",
      "Compute the persistence barcode of a scenario's filtration; the "
      "output is the barcode text itself (one '<dim> <birth> <death>' line "
      "per bar), not a report");
  std::string barcode_scenario = "builtin:toy";
  std::string barcode_curvature = "c0";
  int barcode_dim = -1;
  sc_barcode->add_option("--scenario", barcode_scenario, scenario_help)
      ->capture_default_str();
  sc_barcode->add_option("--curvature", barcode_curvature,
                         "Which of the scenario's curvatures to filter by")
      ->capture_default_str();
  sc_barcode->add_option("--dim", barcode_dim,
                         "Restrict output to this dimension (default: all)")
      ->check(CLI::NonNegativeNumber);

  auto* sc_stab = app.add_subcommand(
      "stability",
      "Compare the barcodes of two curvatures: bottleneck <= sup shift <= "
      "Lipschitz budget, all exact");
  std::string stab_scenario = "builtin:toy";
  std::string stab_c1 = "c0";
  std::string stab_c2 = "c1";
  sc_stab->add_option("--scenario", stab_scenario, scenario_help)
      ->capture_default_str();
  sc_stab->add_option("--c1", stab_c1, "First curvature name")
      ->capture_default_str();
  sc_stab->add_option("--c2", stab_c2, "Second curvature name")
      ->capture_default_str();

  auto* sc_match = app.add_subcommand(
      "match",
      "Exhibit a bar matching of max cost <= eps between two curvatures' "
      "barcodes (or report infeasibility)");
  std::string match_scenario = "builtin:toy";
  std::string match_c1 = "c0";
  std::string match_c2 = "c1";
  std::string match_eps;
  int match_dim = 1;
  sc_match->add_option("--scenario", match_scenario, scenario_help)
      ->capture_default_str();
  sc_match->add_option("--c1", match_c1, "First curvature name")
      ->capture_default_str();
  sc_match->add_option("--c2", match_c2, "Second curvature name")
      ->capture_default_str();
  sc_match->add_option("--eps", match_eps, "Cost budget (rational, e.g. 3/10)")
      ->required();
  sc_match->add_option("--dim", match_dim, "Dimension to match in")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("verify-axioms")) {
      return run_verify_axioms(g, axioms_input);
    }
    if (app.got_subcommand("normal-form")) {
      return run_normal_form(g, nf_input, nf_k, nf_element);
    }
    if (app.got_subcommand("binomial")) {
      return run_binomial(g, binom_input, binom_r, binom_element);
    }
    if (app.got_subcommand("nilpotency")) {
      return run_nilpotency(g, nil_input, nil_op,
                            nil_max_k > 0 ? nil_max_k : g.max_power);
    }
    if (app.got_subcommand("bound4n2")) {
      return run_bound4n2(g, bound_input, bound_n);
    }
    if (app.got_subcommand("ideal-check")) {
      return run_ideal_check(g, ideal_input, ideal_n);
    }
    if (app.got_subcommand("counterexample")) {
      return run_counterexample(g);
    }
    if (app.got_subcommand("barcode")) {
      return run_barcode(g, barcode_scenario, barcode_curvature, barcode_dim);
    }
    if (app.got_subcommand("stability")) {
      return run_stability(g, stab_scenario, stab_c1, stab_c2);
    }
    if (app.got_subcommand("match")) {
      return run_match(g, match_scenario, match_c1, match_c2, match_eps,
                       match_dim);
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const cda::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
