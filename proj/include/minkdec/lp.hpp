#pragma once

#include <vector>

#include "minkdec/rational.hpp"

namespace minkdec::lp {

enum class Status { optimal, unbounded, infeasible };

struct Result {
  Status status = Status::infeasible;
  Rat objective;
  std::vector<Rat> x;
};

// Exact two-phase simplex with Bland's rule:
//   maximize c.x  subject to  A x = b, x >= 0.
// A is row-major, m x k; all pivoting is exact rational.
Result maximize(const std::vector<std::vector<Rat>>& A,
                const std::vector<Rat>& b, const std::vector<Rat>& c);

// Phase I only: is {x >= 0 : A x = b} non-empty?
bool feasible(const std::vector<std::vector<Rat>>& A,
              const std::vector<Rat>& b);

}  // namespace minkdec::lp
