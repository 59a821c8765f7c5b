#pragma once

#include "trialg/functors.hpp"
#include "trialg/report.hpp"
#include "trialg/subspace.hpp"

namespace trialg {

/// Lie centre of a Malcev algebra: {n : J(n, x, y) = 0 for all x, y},
/// computed from the linear system over basis pairs. The result is verified
/// to be an ideal (a theorem; violation raises std::logic_error).
Subspace lie_centre(const MalcevAlgebra& M);

/// T-centre of a triality algebra. T1 = {x in A_2 : x^sigma = x and
/// ((xy)_2 y)_2 - ((x y^sigma)_2 y^sigma)_2 - (x (y y^sigma)_2)_2 = 0 for
/// all y in A_2}; quadratic in y, so y runs over basis vectors and pairwise
/// sums. T2 = T1 + T1^rho, T0 = (T2 A)_0, and the T-centre is T0 + T2.
/// The report records the rho^2-stability of T2, S3-invariance and the
/// ideal property.
struct TCentre {
  Subspace centre;
  Subspace t1, t2, t0;
  Report report;
};
TCentre t_centre(const TrialityAlgebra& A);

/// The sigma-fixed slice of t_centre(A) cap A_2 under the H identification
/// equals lie_centre(F(A)); asserted as exact subspace equality.
Report centre_correspondence(const TrialityAlgebra& A);

/// For perfect A: the T-centre of A / t_centre(A) is zero. A non-perfect
/// input yields quantities["status"] = "hypothesis-not-met" with no checks.
Report quotient_centre_check(const TrialityAlgebra& A);

}  // namespace trialg
