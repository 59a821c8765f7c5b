#pragma once

#include "trialg/graded.hpp"
#include "trialg/report.hpp"
#include "trialg/s3action.hpp"

namespace trialg {

/// 3-dimensional simple Lie algebra, basis (e, h, f) with
/// eh = 2e, ef = h, fh = -2f.
Algebra make_sl2();

/// 2-dimensional nonabelian solvable Lie algebra, basis (x, y), xy = y.
Algebra make_b2();

struct AlgebraWithAction {
  Algebra alg;
  S3Action act;
};

/// The 3-dimensional triality companion on basis (a, v, w):
/// a^2 = a, av = va = v, aw = wa = w, v^2 = (v+2a)/3, w^2 = (w+2a)/3,
/// vw = wv = -(v+w+a)/3; sigma swaps v,w and rho maps v -> w -> -v-w.
/// Grades: a is 0, v and w are 2. Verified at construction.
struct LambdaAlgebra {
  GradedAlgebra graded;
  S3Action act;
};
LambdaAlgebra make_lambda();

/// Z2-graded 5-dimensional algebra: sl2 plus its 2-dimensional Malcev module
/// W = (w2, w-2) with w2 e = -2w-2, w-2 f = 2w2, w2 h = 2w2, w-2 h = -2w-2,
/// sw = -ws, and symmetric odd products w2^2 = f, w2 w-2 = h, w-2^2 = e.
GradedAlgebra make_gamma();

/// Z2-graded 5-dimensional algebra: sl2 plus the 2-dimensional module
/// V = (v1, v-1) with v1 f = v-1, v-1 e = -v1, v1 h = v1, v-1 h = -v-1,
/// and symmetric odd products v1^2 = e, v1 v-1 = h, v-1^2 = f.
GradedAlgebra make_osp();

/// Z2-graded 3-dimensional seed (e, x, y): e^2 = e, ex = xe = x, ey = ye = y,
/// xy = -yx = e, x^2 = y^2 = 0. Contracting it with make_gamma() yields the
/// 7-dimensional simple Malcev algebra.
GradedAlgebra make_t7seed();

/// T(L) = L_1 + L_2 + L_3 with the coordinate-permuting S3 action; requires
/// Jacobi on L, and triality of the result is verified at construction.
AlgebraWithAction make_TL(const Algebra& L);

/// Pair of subspaces (A, B) of a host algebra with A a subalgebra,
/// B*B inside A and A*B inside B.
struct CompatiblePair {
  Subspace A;
  Subspace B;
};
Report check_compatible(const Algebra& L, const CompatiblePair& p);

struct InvariantSubalgebra {
  Algebra alg;
  S3Action act;
  Matrix embedding;  // rows: images of the sub-basis inside T(L)
};

/// The invariant subalgebra T(A,B) of T(L): fixed part {l_1+l_2+l_3 : l in A}
/// and two-dimensional part {a_1+b_2+c_3 : a,b,c in B, a+b+c = 0}.
/// Throws when the pair is not compatible.
InvariantSubalgebra make_TAB(const Algebra& L, const CompatiblePair& p);

struct D4Result {
  Algebra alg;
  S3Action act;
  Report construction_report;  // table transcription, sign repair, gates
};

/// The 28-dimensional simple Lie algebra of type D4 on the basis
/// {e_i, h_i, f_i (i = 1..4)} plus the sixteen subset vectors of {1,2,3,4},
/// with the S3 action permuting the indices 1,2,3. Any ordered basis pair not
/// matched by a table rule (after anticommutativity) multiplies to zero.
/// If the transcribed table fails Jacobi, a bounded sign-repair search flips
/// the global sign of each of the three subset-subset cases and of the
/// subset-h rule (16 combinations) and picks a passing combination,
/// preferring the one that keeps the Cartan case and the h rule unflipped;
/// the outcome is recorded in the report, never silent.
D4Result make_d4();

}  // namespace trialg
