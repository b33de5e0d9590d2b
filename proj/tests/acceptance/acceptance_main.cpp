// Acceptance gate: fifteen end-to-end checks, one line of output each.
// Exit status is the number of failing criteria. Timing limits are pinned
// next to the checks they guard; all comparisons are exact.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "torsionlab/cli.hpp"
#include "torsionlab/serialize.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/verify.hpp"

using namespace torsionlab;
using nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
  double seconds = 0;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(TORSIONLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

VerifyOptions full_options() {
  VerifyOptions opt;
  opt.seed = 1729;
  opt.max_rank = 6;
  opt.quick = false;
  return opt;
}

// Runs one named verify suite and enforces an optional wall-time budget.
bool suite_passes(const std::string& name, double limit_s, std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  SuiteOutcome out = run_verify_suite(name, full_options());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.passed) {
    detail = out.failures.empty() ? "suite failed" : out.failures.front();
    return false;
  }
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream os;
    os << "took " << secs << "s, budget " << limit_s << "s";
    detail = os.str();
    return false;
  }
  return true;
}

Poly poly_m(std::vector<Rational> c) { return Poly(Var::m, std::move(c)); }

bool crit_cli_sl3_fundamental(std::string& detail) {
  CliRun r = run_cli("compute --group sl3 --weight 1,0 --symbolic --format json");
  if (r.exit_code != 0) {
    detail = "exit code " + std::to_string(r.exit_code);
    return false;
  }
  if (r.seconds > 0.1) {
    detail = "took " + std::to_string(r.seconds) + "s, budget 0.1s";
    return false;
  }
  ComputeResponse resp = parse_compute_response(r.out);
  Poly expected = poly_m({Rational(1, 2), Rational(4, 3), Rational(1), Rational(2, 9)});
  if (resp.result.poly != expected) {
    detail = "polynomial mismatch: " + to_string(resp.result.poly);
    return false;
  }
  if (!(resp.result.prefactor == SymbolicConstant{Rational(1), 1, 1, -1, {}})) {
    detail = "prefactor mismatch: " + resp.result.prefactor.to_string();
    return false;
  }
  return true;
}

bool crit_sl3_leading(std::string& detail) {
  GroupSpec s = make_sl3();
  for (auto tau : {std::pair{1L, 0L}, {0L, 1L}}) {
    LeadingConstant lc =
        leading_constant(s, make_weight(s, {Rational(tau.first), Rational(tau.second)}));
    if (lc.value != Rational(4, 9) || lc.residual_degree > 2) {
      detail = "fundamental weight constant " + lc.value.to_string() + ", residual degree " +
               std::to_string(lc.residual_degree);
      return false;
    }
  }
  TorsionResult t = l2_torsion(s, make_weight(s, {Rational(2), Rational(1)}));
  if (t.poly.degree() != 4 || t.poly.leading() != Rational(55, 18)) {
    detail = "(2,1) leading coefficient " + t.poly.leading().to_string();
    return false;
  }
  return true;
}

bool crit_so31_fundamental(std::string& detail) {
  GroupSpec g = make_so(3, 1);
  Weight w = make_weight(g, {Rational(1), Rational(1)});
  TorsionResult t = l2_torsion(g, w);
  if (t.poly != poly_m({Rational(1, 3), Rational(2), Rational(2)})) {
    detail = "polynomial mismatch: " + to_string(t.poly);
    return false;
  }
  LeadingConstant lc = leading_constant(g, w);
  if (lc.value != Rational(1)) {
    detail = "leading constant " + lc.value.to_string();
    return false;
  }
  return true;
}

bool crit_sl3_densities(std::string& detail) {
  GroupSpec s = make_sl3();
  for (long k = 0; k <= 20; ++k) {
    AffineWeight sigma(WBasis::sl3_levi, {AffineCoord{Rational(0), Rational(k)}});
    Poly got = reduced_density(s, sigma).eval_m(Rational(0));
    Rational a = Rational(9, 8) * Rational(k + 1);
    Poly expected(Var::t, {-a * Rational((k + 1) * (k + 1), 9), Rational(0), a});
    if (got != expected) {
      detail = "density mismatch at parameter " + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool crit_constants(std::string& detail) {
  struct Row {
    int p, q;
    long expect;
  };
  for (Row row : {Row{3, 1, -1}, Row{5, 3, -6}, Row{7, 5, -20}}) {
    SymbolicConstant c = prefactor_constant(row.p, row.q);
    SymbolicConstant want{Rational(row.expect), 1, 0, -1, {}};
    if (!(c == want)) {
      detail = "so(" + std::to_string(row.p) + "," + std::to_string(row.q) + ") constant " +
               c.to_string();
      return false;
    }
  }
  return true;
}

bool crit_vanishing(std::string& detail) {
  for (int p = 1; p <= 9; ++p) {
    for (int q = 1; q <= p; ++q) {
      std::string name = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
      VanishingReport r = classify_vanishing(name);
      bool both_odd = (p % 2 == 1) && (q % 2 == 1);
      if (r.zero_flag != !both_odd) {
        detail = name + " classified " + (r.zero_flag ? "zero" : "nonzero");
        return false;
      }
      if (both_odd && p > 1 && r.deficiency != 1) {
        detail = name + " deficiency " + std::to_string(r.deficiency);
        return false;
      }
    }
  }
  VanishingReport sl = classify_vanishing("sl3");
  if (sl.deficiency != 1 || sl.zero_flag) {
    detail = "sl3 misclassified";
    return false;
  }
  return true;
}

bool crit_end_to_end(std::string& detail) {
  std::string golden = std::string(TORSIONLAB_DATA_DIR) + "/golden.jsonl";
  CliRun r = run_cli("verify --seed 1729 --golden " + golden + " --format json");
  if (r.exit_code != 0) {
    detail = "exit code " + std::to_string(r.exit_code);
    return false;
  }
  if (r.seconds > 60) {
    detail = "took " + std::to_string(r.seconds) + "s, budget 60s";
    return false;
  }
  json j = json::parse(r.out, nullptr, false);
  if (j.is_discarded() || j.value("passed", false) != true) {
    detail = "report did not confirm a clean pass";
    return false;
  }
  bool golden_ran = false;
  for (const auto& s : j["suites"])
    if (s["name"] == "golden" && s["passed"] == true && s["checks"].get<long>() > 0)
      golden_ran = true;
  if (!golden_ran) {
    detail = "golden corpus diff missing or failed";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* text;
    std::function<bool(std::string&)> run;
  };

  const std::vector<Criterion> criteria = {
      {"sl3 fundamental weight torsion polynomial via the CLI, under 0.1s",
       crit_cli_sl3_fundamental},
      {"sl3 leading constants 4/9 and the (2,1) leading coefficient 55/18", crit_sl3_leading},
      {"so(3,1) fundamental weight polynomial and unit leading constant", crit_so31_fundamental},
      {"generic assembly equals the closed form on all sl3 weights up to 4, under 5s",
       [](std::string& d) { return suite_passes("routes", 5, d); }},
      {"torsion is invariant under the Cartan twist on five groups, under 30s",
       [](std::string& d) { return suite_passes("theta", 30, d); }},
      {"even interpolation identities on 200 seeded instances, under 10s",
       [](std::string& d) { return suite_passes("interpolation", 10, d); }},
      {"densities match signed dimension multiples of the even basis",
       [](std::string& d) { return suite_passes("cross", 0, d); }},
      {"Casimir eigenvalues split through every decomposition block",
       [](std::string& d) { return suite_passes("kostant", 0, d); }},
      {"normalized torsion polynomial sits between the linear bounds",
       [](std::string& d) { return suite_passes("sandwich", 0, d); }},
      {"sl3 reduced densities have the quadratic closed form for parameters up to 20",
       crit_sl3_densities},
      {"constant table entries for so(3,1), so(5,3), so(7,5)", crit_constants},
      {"vanishing classifier over all signatures up to 9 and sl3", crit_vanishing},
      {"exterior power table, restriction masses, quadratic growth certificate, under 20s",
       [](std::string& d) { return suite_passes("spectrum", 20, d); }},
      {"convex combination norm bound on 20 seeded weights",
       [](std::string& d) { return suite_passes("convexhull", 0, d); }},
      {"full verification pass with golden corpus diff via the CLI, under 60s",
       crit_end_to_end},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[512];
    std::snprintf(line, sizeof(line), "criterion %02zu: %s %s (%.2fs)", i + 1,
                  ok ? "PASS" : "FAIL", criteria[i].text, secs);
    std::cout << line;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}
