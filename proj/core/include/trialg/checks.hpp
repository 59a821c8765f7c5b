#pragma once

#include "trialg/algebra.hpp"
#include "trialg/report.hpp"

namespace trialg {

/// xy + yx = 0 on all basis pairs (complete by bilinearity).
Report check_anticommutative(const Algebra& A);

/// (xy)z + (yz)x + (zx)y = 0 on all basis triples.
Report check_jacobi(const Algebra& A);

/// Jacobian J(x,y,z) = (xy)z + (yz)x + (zx)y.
Vec jacobian(const Algebra& A, const Vec& x, const Vec& y, const Vec& z);

/// The Malcev identity ((xy)z)x + ((yz)x)x + ((zx)x)y = (xz)(yx).
/// Quadratic in x, so the check substitutes basis vectors and all pairwise
/// sums b_i + b_j for x (complete in characteristic 0), basis vectors for y,z.
/// Also runs the equivalent forms J(x*y,x,y)=0 and J(x,y,z)*x=J(x*z,x,y)
/// (polarized likewise) and reports them as separate items.
Report check_malcev(const Algebra& A);

/// Simplicity certificate: A^2 = A, {x : xA = 0} = 0, trace form
/// nondegenerate, and the ideal closure of every basis vector is A.
/// Sufficient at the dimensions handled here, not a general ideal-lattice
/// decision procedure.
Report simplicity_certificate(const Algebra& A);

}  // namespace trialg
