#pragma once

#include <vector>

#include "fillscope/integer.hpp"

namespace fillscope {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;
  Rational objective;
};

// Exact two-phase primal simplex with Bland's rule:
//   minimize cost . x  subject to  A x = b,  x >= 0.
// Redundant equality rows are detected and dropped after phase one.
LpResult solve_standard_lp(const std::vector<std::vector<Rational>>& A,
                           const std::vector<Rational>& b,
                           const std::vector<Rational>& cost);

}  // namespace fillscope
