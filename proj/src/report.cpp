#include "cda/report.hpp"

#include <sstream>

#include "cda/errors.hpp"

namespace cda {

bool RunReport::all_pass() const {
  for (const ClaimResult& c : results) {
    if (!c.pass) return false;
  }
  return true;
}

Json claim_to_json(const ClaimResult& c) {
  Json j = Json::object();
  j["claim"] = c.claim;
  j["pass"] = c.pass;
  if (c.witness.has_value()) {
    j["witness"] = to_expression_string(*c.witness);
  } else {
    j["witness"] = nullptr;
  }
  Json params = Json::object();
  for (const auto& [key, value] : c.parameters) {
    params[key] = value;
  }
  j["parameters"] = params;
  return j;
}

Json report_to_json(const RunReport& r) {
  Json j = Json::object();
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  Json results = Json::array();
  for (const ClaimResult& c : r.results) {
    results.push_back(claim_to_json(c));
  }
  j["results"] = results;
  j["timing_ms"] = r.timing_ms;
  j["version"] = r.version;
  j["all_pass"] = r.all_pass();
  return j;
}

std::string render_report(const RunReport& r, const std::string& format) {
  if (format == "json") {
    return report_to_json(r).dump(2) + "\n";
  }
  if (format != "text") {
    throw ValidationError("unknown report format '" + format +
                          "' (expected \"json\" or \"text\")");
  }
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  if (!r.parameters.empty()) {
    out << "parameters:\n";
    for (auto it = r.parameters.begin(); it != r.parameters.end(); ++it) {
      out << "  " << it.key() << " = "
          << (it.value().is_string() ? it.value().get<std::string>()
                                     : it.value().dump())
          << "\n";
    }
  }
  for (const ClaimResult& c : r.results) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.claim;
    if (!c.parameters.empty()) {
      out << "  (";
      bool first = true;
      for (const auto& [key, value] : c.parameters) {
        if (!first) out << ", ";
        first = false;
        out << key << " = " << value;
      }
      out << ")";
    }
    out << "\n";
    if (c.witness.has_value()) {
      out << "       witness: " << to_expression_string(*c.witness) << "\n";
    }
  }
  out << (r.all_pass() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << " ("
      << r.results.size() << " claim" << (r.results.size() == 1 ? "" : "s")
      << ", " << r.timing_ms << " ms, version " << r.version << ")\n";
  return out.str();
}

}  // namespace cda
