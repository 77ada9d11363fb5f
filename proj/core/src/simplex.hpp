#pragma once

#include "sphsmooth/lattice.hpp"

namespace sphsmooth::detail {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVector x;
};

/// maximize c·x subject to A x = b, x >= 0, exactly over the rationals.
/// Two-phase tableau simplex with Bland's rule, so it cannot cycle.
LpResult maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c);

/// Feasibility of A x = b, x >= 0.
bool feasible(const std::vector<RatVector>& a, const RatVector& b);

}  // namespace sphsmooth::detail
