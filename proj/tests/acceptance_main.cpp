// Prints one PASS/FAIL line per acceptance criterion. Exit code 0 only when
// every criterion passes.
#include <filesystem>
#include <iostream>
#include <string>

#include "tau/cli/cli.hpp"
#include "tau/verify/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string suite_name = argc > 1 ? argv[1] : "all";
  const auto suite = tau::verify::suite_from_string(suite_name);
  if (!suite) {
    std::cerr << "unknown suite: " << suite_name << '\n';
    return 2;
  }
  tau::verify::AcceptanceOptions options;
  options.run_command = tau::cli::run_command;
  options.scratch_dir = std::filesystem::temp_directory_path() / "tau-acceptance";
  const auto results = tau::verify::run_suite(*suite, options, &std::cerr);
  tau::verify::print_results(results, std::cout);
  return tau::verify::all_passed(results) ? 0 : 1;
}
