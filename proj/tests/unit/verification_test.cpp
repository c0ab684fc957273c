#include <doctest.h>

#include <set>

#include "cubicones/verification.hpp"

using namespace cubicones;

TEST_CASE("verification report is deterministic and covers every criterion") {
  const VerificationReport a = run_verification();
  const VerificationReport b = run_verification();
  CHECK(a.to_json() == b.to_json());

  CHECK(a.checks.size() >= 20);
  CHECK(a.all_passed());
  std::size_t flagged = 0;
  std::set<int> criteria;
  for (const auto& c : a.checks) {
    flagged += c.status == CheckResult::Status::flagged;
    criteria.insert(c.criterion);
  }
  CHECK(flagged == 1);
  for (int k = 1; k <= 14; ++k) CHECK(criteria.count(k) == 1);
}
