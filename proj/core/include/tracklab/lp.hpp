#pragma once

#include "tracklab/linalg.hpp"

namespace tracklab {

// Exact feasibility of {M x = b, x >= 0} by phase-1 simplex with Bland's
// rule. Exactly one of the two certificates is populated:
//   feasible  -> x with M x = b, x >= 0
//   infeasible-> y with y^T M <= 0 (componentwise) and y^T b > 0
struct LPFeas {
    bool feasible = false;
    RatVec x;
    RatVec y;
};

LPFeas lp_feasible(const RatMatrix& m, const RatVec& b);

// Checks a Farkas certificate by plain matrix arithmetic.
bool verify_farkas(const RatMatrix& m, const RatVec& b, const RatVec& y);

// Feasibility of {A w = 0, w >= 1}. On success w is strictly positive.
LPFeas lp_positive_kernel_point(const RatMatrix& a);

// Feasibility of {F x >= g, x >= low} with low broadcast over all x.
LPFeas lp_feasible_ineq(const RatMatrix& f, const RatVec& g, const Rat& low);

// Feasibility of {F x >= g} with x free.
LPFeas lp_feasible_ineq_free(const RatMatrix& f, const RatVec& g);

}  // namespace tracklab
