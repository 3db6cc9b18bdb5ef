#pragma once

// Suite orchestration behind the command-line tool: configuration checks,
// report assembly, artifacts and exit codes.

#include <cstddef>
#include <string>
#include <vector>

#include "sjord/report.hpp"

namespace sjord {

/// Invalid configuration or an unsupported (suite, n) pair; maps to exit 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  int n = 2;
  std::vector<std::string> suites{"all"};
  std::vector<std::string> reps{"fund"};
  bool typo_variants = true;
  std::size_t max_dim = 216;
};

struct Artifact {
  std::string filename;
  std::string content;
};

struct RunResult {
  std::vector<CheckReport> reports;
  std::vector<Artifact> artifacts;

  bool passed() const;
  /// 0 when every check passes (variant-passes allowed), 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
};

/// SJORD_MAX_DIM, or 216 when unset; throws ConfigError on a malformed value.
std::size_t max_dim_from_env();

/// Throws ConfigError for out-of-range n, unknown suites or reps, and
/// representations larger than max_dim.
void validate(const RunConfig& cfg);

/// Runs the requested suites in a fixed order; construction errors propagate
/// as sjord::Error.
RunResult run(const RunConfig& cfg);

/// JSON array of report records.
std::string reports_json(const std::vector<CheckReport>& reports);
std::string reports_text(const std::vector<CheckReport>& reports);

/// One line per nonzero entry, "row col value", 1-based.
std::string dump_matrix(const HMatrix& m);
std::string dump_matrix(const QMatrix& m);

/// Objects: rq-fund, rh-contracted, rh-universal, l-operator, commutator-table.
/// `h0` evaluates matrices at h = 0. Throws ConfigError for unsupported pairs.
Artifact dump_object(const std::string& object, int n, bool h0 = false);

}  // namespace sjord
