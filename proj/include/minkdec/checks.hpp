#pragma once

#include <string>
#include <vector>

namespace minkdec {

struct CheckResult {
  std::string name;
  long long pass = 0;
  long long fail = 0;
};

// Exhaustive structural checks over every partition and subset, combinatorial
// suites up to max_n and polytope suites up to max_poly_n. Each checked
// instance counts once.
std::vector<CheckResult> run_verification(int max_n, int max_poly_n);

}  // namespace minkdec
