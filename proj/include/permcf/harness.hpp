#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permcf/mpoly.hpp"
#include "permcf/perm.hpp"

namespace permcf {

inline constexpr const char* kToolVersion = "1.0.0";

/// Outcome of one registry case run.
struct CaseOutcome {
  bool pass = true;
  std::string witness;  // minimal failing datum
  std::string note;     // extra finding worth reporting (informational)
};

/// One verifiable identity: id, what it checks, how, and at which sizes.
struct TheoremCase {
  std::string id;
  std::string description;
  // enumeration-equality | multiset-equality | grid-identity |
  // series-coefficient | float-spot | example-regression
  std::string method;
  int n_default = 0;  // default max size
  int n_min = 0;      // smallest size the method supports
  std::function<CaseOutcome(int max_n)> run;
};

struct CaseResult {
  std::string id;
  std::string status;  // pass | fail | skip | error
  int n = 0;
  long runtime_ms = 0;
  std::string witness;
  std::string note;
};

struct VerifyConfig {
  std::vector<std::string> ids;  // empty = all
  int max_n = -1;                // -1 = per-case default
  bool timings = false;          // emit wall-clock runtimes in JSON
  bool parallel = true;
};

struct Report {
  std::string version;
  VerifyConfig config;
  std::vector<CaseResult> cases;
  bool pass = true;
};

const std::vector<TheoremCase>& theorem_registry();
std::vector<std::string> registry_ids();

/// Runs the selected cases (all when ids is empty).  Unknown ids throw
/// std::invalid_argument listing the registry.
Report verify(const VerifyConfig& config);

/// The paper-example regression cases only (examples, fig-3).
Report reproduce_examples();

/// Deterministic JSON of a report; runtime_ms is zeroed unless
/// config.timings was set.
std::string report_json(const Report& report);
std::string report_text(const Report& report);

/// Distribution table of named statistics over a class, for n' = lo..n.
struct TableOptions {
  std::string cls = "S";
  std::vector<std::string> stats;
  int n = 5;
  std::string format = "csv";  // csv | json
};
std::string make_table(const TableOptions& opt);

}  // namespace permcf
