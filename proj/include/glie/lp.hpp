#pragma once

#include "glie/linalg.hpp"

namespace glie {

/// Outcome of the feasibility problem { x : A x = b, x >= 0 }.
/// Exactly one certificate is populated: a primal point when feasible, or a
/// Farkas vector y with y^T A >= 0 and y^T b < 0 when not.
struct FeasibilityResult {
  bool feasible = false;
  RationalVector point;
  RationalVector farkas;
};

/// Phase-one simplex with Bland's rule, exact over Q.
FeasibilityResult nonnegative_feasibility(const RationalMatrix& a, const RationalVector& b);

/// Independent check of whichever certificate the result carries.
bool certificate_holds(const RationalMatrix& a, const RationalVector& b, const FeasibilityResult& r);

}  // namespace glie
