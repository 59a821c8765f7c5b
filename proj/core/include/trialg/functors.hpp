#pragma once

#include <optional>
#include <vector>

#include "trialg/algebra.hpp"
#include "trialg/graded.hpp"
#include "trialg/report.hpp"
#include "trialg/s3action.hpp"
#include "trialg/structure.hpp"

namespace trialg {

/// Algebra with a verified triality action: the group relations and the
/// automorphism property hold, the defining identity
/// (x^sigma - x) + (x^sigma - x)^rho + (x^sigma - x)^rho^2 = 0 holds, and the
/// sign-isotypic component vanishes.
struct TrialityAlgebra {
  Algebra alg;
  S3Action act;
  IsotypicDecomposition dec;
};
TrialityAlgebra make_triality(Algebra alg, S3Action act);

/// Anticommutative algebra satisfying the (polarized) Malcev identity.
struct MalcevAlgebra {
  Algebra alg;
};
MalcevAlgebra make_malcev(Algebra alg);

/// Structure constants induced on a product-closed S3-stable subspace, with
/// the restricted action.
TrialityAlgebra restrict_triality(const TrialityAlgebra& L, const Subspace& S,
                                  Matrix* embedding = nullptr);

/// Quotient by an S3-stable ideal with the induced action.
TrialityAlgebra quotient_triality(const TrialityAlgebra& L, const Subspace& I,
                                  Matrix* projection = nullptr);

/// The graded side of a triality algebra: grade 0 is the fixed component,
/// grade 2 is the sigma-fixed slice H of the 2-dimensional component under
/// the identification m -> m (x) (v+w); the grade-2 x grade-2 product has
/// grade-0 part (3/2) pi_0(xy) and grade-2 part -3 pi_2(xy).
struct PsiResult {
  GradedAlgebra graded;  // grade-0 block first, then the grade-2 block
  Matrix m0_rows;        // fixed-component basis, rows in L
  Matrix m2_rows;        // sigma-fixed slice basis, rows in L
};
PsiResult psi(const TrialityAlgebra& L);

/// Grade-2 part with the product x*y = (xy)_2.
MalcevAlgebra psi0(const GradedAlgebra& M);

/// F = psi0 after psi; slice_rows identifies the Malcev algebra inside L.
struct FResult {
  MalcevAlgebra malcev;
  Matrix slice_rows;
};
FResult functor_F(const TrialityAlgebra& L);

/// Inner derivations as grade 0 over the algebra as grade 2, mixed products
/// by map application and x*y = D(x,y)/6 + [x,y] on grade 2.
struct Phi0Result {
  GradedAlgebra graded;
  std::vector<Matrix> inder_basis;
  Subspace inder_span;  // flattened maps
};
Phi0Result phi0(const MalcevAlgebra& M);

/// Contraction with the triality companion, S3 acting on the companion
/// factor only.
struct PhiResult {
  TrialityAlgebra triality;
  Contraction contraction;
};
PhiResult phi(const GradedAlgebra& M);

/// G = phi after phi0.
struct GResult {
  TrialityAlgebra triality;
  Phi0Result graded;
  Contraction contraction;
};
GResult functor_G(const MalcevAlgebra& M);

/// Annihilator of the 2-dimensional component inside the fixed component.
Subspace N_of(const TrialityAlgebra& L);

struct NormalityResult {
  bool normal = false;
  Subspace annihilator;  // N(A)
  Subspace a22_fixed;    // (A_2^2)_0
};
NormalityResult is_normal(const TrialityAlgebra& L);

/// The core K(A): subalgebra generated by A_2, modulo N(A) cap (A_2^2)_0.
struct KResult {
  TrialityAlgebra algebra;
  Subspace core;  // the subalgebra generated by A_2, inside L
};
KResult K_of(const TrialityAlgebra& L);

/// Verifies the roundtrip G(F(L)) = L: when L is normal, constructs the
/// explicit map (xy)_0 -> D(x,y)/6 on the fixed part, checks it well-defined
/// on all linear relations and bijective, extends it to an isomorphism
/// G(F(L)) -> L and verifies it on basis pairs together with
/// S3-equivariance. When L is not normal, reports the concrete obstruction.
/// Map inconsistency under normality throws std::logic_error.
struct RoundtripResult {
  Report report;
  std::optional<Matrix> iso;  // rows: images in L of the G(F(L)) basis
};
RoundtripResult roundtrip_check(const TrialityAlgebra& L);

/// The explicit isomorphism contract(psi(L), Lambda) -> L sending
/// m (x) a to m, x (x) v to -h^rho and x (x) w to h + h^rho; verified to be
/// a bijective S3-equivariant algebra morphism.
struct ContractionRoundtrip {
  Report report;
  TrialityAlgebra phi_psi;
  Matrix iso;
};
ContractionRoundtrip contraction_roundtrip(const TrialityAlgebra& L);

/// Span of D(x, y) for x over the algebra and y over an ideal.
Subspace inder_relative(const MalcevAlgebra& M, const Subspace& I);

/// Decides triviality by the two equivalent routes: Jacobi on F(P) and
/// Jacobi on the full graded algebra psi(P); disagreement is an internal
/// error. The outcome is in quantities["trivial"].
Report triviality_check(const TrialityAlgebra& P);

/// Solvable radical of a Malcev algebra: the slice of the solvable radical
/// of G(M) through the canonical identification, re-verified solvable.
Subspace malcev_radical(const MalcevAlgebra& M);

}  // namespace trialg
