#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pwcoh {

struct CheckResult {
  std::string name;
  int cases = 0;
  bool passed = false;
  std::string detail;  // describes the first failure, empty when passed
};

// Seeded property suites over small randomized inputs: the differential
// squares to zero and satisfies the graded Leibniz rule, the wedge is graded
// commutative, restriction commutes with the differential and with pointwise
// evaluation, the extension operators restrict back exactly, and the text
// serialization round-trips. A fixed seed reproduces every case.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed, int cases);

}  // namespace pwcoh
