#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace blochkit::acceptance {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Run the full verification catalogue. Randomized checks derive their
// generators from `seed`, so a fixed seed reproduces a run exactly.
// If `progress` is non-null a [PASS]/[FAIL] line is printed per check as it
// completes.
std::vector<CheckResult> run_all(std::uint64_t seed, std::ostream* progress);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace blochkit::acceptance
