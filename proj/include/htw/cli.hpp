#pragma once

#include <string>
#include <vector>

namespace htw {

/// Parsed command line. `command` selects the mode; the remaining fields are
/// only meaningful for the modes that declare them.
struct RunConfig {
  std::string command;             // decompose | validate | weak-coverage | exact
  std::string input;               // graph file
  std::string decomposition_path;  // validate: decomposition JSON file
  std::string class_name;          // preset oracle name
  std::vector<std::string> family_files;  // forbidden induced subgraph files
  int k = 0;
  std::vector<int> z;    // weak-coverage terminals
  std::string output;    // result file; empty writes to stdout
  std::string format = "json";  // json | dot
  bool trace = false;
  bool exact = false;    // cross-check against the brute-force oracles
};

/// Executes one command. Exit code 0: success / valid / covered.
/// Exit code 2: width rejected / no coverage / invalid decomposition.
/// Exit code 1: usage, I/O or input-format error.
int run(const RunConfig& config);

/// Parses argv and dispatches to run().
int run_cli(int argc, const char* const* argv);

}  // namespace htw
