#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gft/catalog.hpp"
#include "gft/heights.hpp"

namespace gft {

inline constexpr const char* kToolVersion = "1.0.0";

/// Suite names accepted by run_suites / the verify command.
std::vector<std::string> all_suite_names();

struct RunOptions {
  Caps caps;
  std::vector<std::string> suites;  // empty = all
  bool with_timing = true;
};

struct RunResult {
  nlohmann::ordered_json report;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
};

/// Runs the selected verification suites over the catalog and assembles the
/// deterministic JSON report (volatile data lives in the single "timing"
/// field). Cap overruns are recorded as SKIP, never as failures.
RunResult run_suites(const std::vector<CatalogEntry>& catalog,
                     const RunOptions& options);

}  // namespace gft
