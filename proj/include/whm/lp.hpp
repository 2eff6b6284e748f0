#pragma once

#include <cstddef>
#include <vector>

#include "whm/bigint.hpp"

namespace whm {

/// maximize c^T x  subject to  A x <= b,  x >= 0.
struct LpProblem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Exact dense simplex in dictionary form over rationals with Bland's rule
/// (no cycling). Rows with negative b go through an auxiliary-variable
/// phase 1 first.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace whm
