// Acceptance suite: runs every verification check and prints one line per
// criterion. Exit status is nonzero when any criterion fails; flagged items
// are reported but do not fail.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cubicones/verification.hpp"

int main() {
  cubicones::VerificationOptions opts;
  if (const char* path = std::getenv("CUBICONES_PA_VERTICES")) opts.polytope_vertex_file = path;
  const cubicones::VerificationReport report = cubicones::run_verification(opts);

  std::map<int, std::vector<const cubicones::CheckResult*>> by_criterion;
  for (const auto& c : report.checks) by_criterion[c.criterion].push_back(&c);

  bool any_failed = false;
  for (const auto& [criterion, checks] : by_criterion) {
    bool failed = false, flagged = false;
    for (const auto* c : checks) {
      failed |= c->status == cubicones::CheckResult::Status::fail;
      flagged |= c->status == cubicones::CheckResult::Status::flagged;
    }
    any_failed |= failed;
    std::cout << "criterion " << (criterion < 10 ? " " : "") << criterion << ": "
              << (failed ? "FAIL" : flagged ? "PASS (flagged)" : "PASS");
    std::cout << "  [";
    for (std::size_t i = 0; i < checks.size(); ++i) std::cout << (i ? " " : "") << checks[i]->name;
    std::cout << "]\n";
    for (const auto* c : checks)
      if (c->status != cubicones::CheckResult::Status::pass)
        std::cout << "    " << c->name << ": expected " << c->expected << ", computed "
                  << c->computed << "\n      " << c->detail << "\n";
  }
  std::cout << (any_failed ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " ("
            << report.checks.size() << " checks)\n";
  return any_failed ? 1 : 0;
}
