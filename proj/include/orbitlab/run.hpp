#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "orbitlab/problem.hpp"

namespace orbitlab {

inline constexpr const char* tool_name = "orbitlab";
inline constexpr const char* tool_version = "1.0.0";

/// 0 success, 1 error or a bound that failed to hold, 2 theorem hypotheses not met.
struct RunOutcome {
  Json report;
  int exit_code = 0;
};

RunOutcome run_problem(const Problem& problem, const RunOptions& opts = {});
RunOutcome run_problem(const Json& doc, const RunOptions& opts = {});

struct ReproduceOutcome {
  Json report;
  /// One "PASS ..." or "FAIL ..." line per manifest entry.
  std::vector<std::string> lines;
  int exit_code = 0;
};

/// Runs every manifest entry and checks its expectations. Problem paths are
/// resolved against base_dir.
ReproduceOutcome reproduce_suite(const Json& manifest, const std::filesystem::path& base_dir,
                                 const RunOptions& opts = {});

Json read_json_file(const std::filesystem::path& path);

}  // namespace orbitlab
