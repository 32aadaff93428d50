#pragma once

#include <map>
#include <string>

namespace windmill {

// One batch run: a subcommand plus string options (mirroring the CLI flags).
// Reports embed the resolved configuration; identical configs produce
// byte-identical reports.
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> options;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 input error, 2 counterexample, 3 inconclusive
  std::string report;
  std::string error;
};

// Executes the run and, when an "out" option is present, writes the report
// there as well.
RunResult execute(const RunConfig& cfg);

const char* runner_version();

}  // namespace windmill
