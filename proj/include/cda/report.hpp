#pragma once

#include <string>

#include "cda/checks.hpp"
#include "cda/io.hpp"

namespace cda {

// The result envelope every CLI command emits: the command name, an echo of
// its effective parameters, one entry per claim, wall time and the tool
// version. Serialization is deterministic (sorted keys, claims in emission
// order); timing_ms is the only field that varies between identical runs.
struct RunReport {
  std::string command;
  Json parameters = Json::object();
  std::vector<ClaimResult> results;
  double timing_ms = 0.0;
  std::string version;

  bool all_pass() const;
};

Json claim_to_json(const ClaimResult& c);
Json report_to_json(const RunReport& r);

// format is "json" or "text"; anything else throws ValidationError.
std::string render_report(const RunReport& r, const std::string& format);

}  // namespace cda
