#pragma once

#include <string>
#include <vector>

namespace pljs::tools {

struct ProcessResult {
  int status = -1;  // exit code, or -1 when the program could not start
  std::string out;
};

/// Locates an executable: a path containing '/' as is, otherwise via PATH.
std::string find_program(const std::string& name);

/// Runs argv[0] with the given arguments. Stdout is captured when `capture`
/// is set and passed through otherwise.
ProcessResult run_process(const std::vector<std::string>& argv, bool capture);

}  // namespace pljs::tools
