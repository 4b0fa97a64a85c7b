#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tau::verify {

enum class Suite { Series, Congruence, Spectral, Search, Bounds, All };

std::optional<Suite> suite_from_string(std::string_view name);

// Runs one CLI invocation (arguments without the program name) and returns
// its exit code.
using CommandRunner =
    std::function<int(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)>;

struct AcceptanceOptions {
  CommandRunner run_command;
  // Where temporary cache files go; defaults to the system temp directory.
  std::filesystem::path scratch_dir;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Criteria belonging to the suite, in numeric order. Progress lines go to
// `progress` when it is non-null.
std::vector<CriterionResult> run_suite(Suite suite, const AcceptanceOptions& options,
                                       std::ostream* progress = nullptr);

// One "PASS"/"FAIL" line per criterion plus a summary line.
void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

// Removes the "timestamp" line from a pretty-printed JSON envelope.
std::string strip_timestamp(const std::string& json_text);

}  // namespace tau::verify
