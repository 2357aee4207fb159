#pragma once

#include "dimwit/errors.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// Outcome of the phase-1 solve for { x >= 0 : A x = b }.
struct FeasibilityResult {
  bool feasible = false;
  RealVector solution;        // structural variables; meaningful when feasible
  double max_violation = 0.0; // max_i |A x - b| at the returned point
  int pivots = 0;
};

// Phase-1 simplex over an artificial basis, entering and leaving choices by
// Bland's rule. Feasible iff the artificial objective reaches tol or below.
FeasibilityResult phase1_feasible(const RealMatrix& a, const RealVector& b,
                                  double tol = 1e-9);

}  // namespace dimwit
