#pragma once

#include <string>
#include <vector>

namespace torsionlab {

struct DispatchResult {
  int exit_code = 0;
  std::string out;  // primary document, goes to standard output
  std::string err;  // diagnostics, go to standard error
};

// Full command surface. args excludes the program name. Exit codes: 0 success,
// 1 verification failure, 2 usage or validation error.
DispatchResult dispatch(const std::vector<std::string>& args);

int run_main(int argc, char** argv);

}  // namespace torsionlab
