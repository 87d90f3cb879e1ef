// One PASS/FAIL/SKIP line per acceptance criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion 6   a single criterion (8 runs 8a and 8b)
//   acceptance --verbose       claim-level detail under each line
#include "starconf/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace starconf;

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<std::string> which;
  bool verbose = false;
  SuiteOptions o;
  app.add_option("--criterion", which, "criterion id (1-12, 8a, 8b)");
  app.add_flag("--verbose", verbose);
  app.add_option("--prime", o.prime)->capture_default_str();
  app.add_option("--seed", o.seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  if (which.empty())
    for (const auto& [id, fn] : criteria()) which.push_back(id);

  std::vector<CriterionResult> results;
  for (const auto& id : which) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run_criterion(id, o);
    } catch (const std::exception& e) {
      r = {id, "could not run", {{id, "", "", "", ClaimStatus::Fail, e.what()}}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* word = r.status() == ClaimStatus::Pass ? "PASS" : r.status() == ClaimStatus::Fail ? "FAIL" : "SKIP";
    std::printf("%s %-3s %s (%zu claims, %.2fs)\n", word, r.id.c_str(), r.title.c_str(), r.claims.size(), secs);
    if (verbose || r.status() != ClaimStatus::Pass)
      for (const auto& c : r.claims) {
        std::printf("    %-7s %s: expected %s; computed %s", to_string(c.status).c_str(), c.id.c_str(),
                    c.expected.c_str(), c.computed.c_str());
        if (!c.reason.empty()) std::printf(" (%s)", c.reason.c_str());
        std::printf("\n");
      }
    std::fflush(stdout);
    results.push_back(std::move(r));
  }
  return exit_code(results);
}
