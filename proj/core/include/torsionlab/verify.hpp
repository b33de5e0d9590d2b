#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torsionlab {

struct VerifyOptions {
  std::uint64_t seed = 1729;
  int max_rank = 6;          // cap for the randomized and exhaustive sweeps
  std::string golden_path;   // JSON Lines corpus; empty skips the golden suite
  bool quick = false;        // reduced case counts for fast smoke runs
};

struct SuiteOutcome {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> failures;  // first few diagnostics
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteOutcome> suites;

  bool all_passed() const {
    for (const auto& s : suites)
      if (!s.passed) return false;
    return true;
  }
};

// Suite registry, in execution order.
std::vector<std::string> verify_suite_names();

SuiteOutcome run_verify_suite(const std::string& name, const VerifyOptions& opt);

// Runs the named suites (all when empty) and collects outcomes.
VerifyReport run_verify(const std::vector<std::string>& names, const VerifyOptions& opt);

std::string to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace torsionlab
