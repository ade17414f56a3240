#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelcov/bounds.hpp"
#include "skelcov/json_io.hpp"

namespace skelcov::cli {

/// Exit statuses of the command line front end.
enum Status : int {
  kOk = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kResourceExceeded = 3,
};

/// Per-invocation state: loaded input objects by path, run configuration.
/// Objects are parsed once and referenced by their path; re-loading the same
/// path returns the cached document.
struct Workspace {
  Bounds bounds = Bounds::from_env();
  std::optional<long long> residue_char_override;
  std::string format = "json";  // or "table"
  std::map<std::string, Json> objects;

  const Json& load(const std::string& path);
};

/// Dispatches one invocation. `args` excludes the program name. All reports
/// go to `out`, diagnostics to `err`; output bytes are stable across runs on
/// identical inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Golden checks over the bundled worked examples. `fixtures_dir`, when set,
/// loads fixture inputs from <dir>/<name>.json instead of the built-ins.
int run_paper_suite(std::ostream& out, std::ostream& err, bool list_only = false,
                    const std::optional<std::string>& fixtures_dir = {});

/// Names of the bundled fixtures, sorted.
std::vector<std::string> paper_fixture_names();

/// Built-in input object for a fixture name (what a fixtures dir would hold).
Json paper_fixture_input(const std::string& name);

}  // namespace skelcov::cli
