#pragma once

#include <vector>

#include "trialg/algebra.hpp"
#include "trialg/report.hpp"

namespace trialg {

/// Smallest subspace containing gens and closed under the product.
Subspace subalgebra_closure(const Algebra& A, const Subspace& gens);

/// Smallest subspace containing gens and closed under products with all of A
/// (two-sided).
Subspace ideal_closure(const Algebra& A, const Subspace& gens);

bool is_ideal(const Algebra& A, const Subspace& I);

/// S^(0) = S, S^(i+1) = span(S^(i) * S^(i)); stops at the first repetition.
std::vector<Subspace> derived_series(const Algebra& A, const Subspace& S);
std::vector<Subspace> derived_series(const Algebra& A);
bool is_solvable(const Algebra& A, const Subspace& S);
bool is_solvable(const Algebra& A);

/// Gram matrix of (x,y) -> trace(L_x L_y) for an arbitrary algebra.
Matrix trace_form(const Algebra& A);
/// Killing form with ad = left multiplication; same formula, Lie naming.
Matrix killing_form(const Algebra& A);

/// {x : kappa(x, [A,A]) = 0}, the solvable radical in characteristic 0
/// (Cartan's criterion). Requires anticommutativity and Jacobi; the result is
/// re-verified solvable. Throws std::invalid_argument on a non-Lie input.
Subspace solvable_radical_lie(const Algebra& A);

struct DerivationAlgebra {
  Algebra alg;                   // maps under commutator
  std::vector<Matrix> basis_maps;
};

/// All derivations D with D(xy) = D(x)y + xD(y), solved as a linear system
/// over basis pairs. The returned algebra is the space of maps under the
/// commutator, with the embedding matrices alongside.
DerivationAlgebra derivation_algebra(const Algebra& A);

/// D(x,y) = L_[x,y] + [L_x, L_y] as a right-action matrix.
Matrix inner_derivation(const Algebra& A, const Vec& x, const Vec& y);

/// Span of {D(b_i, b_j)} inside flattened map space; every generator is
/// verified to satisfy the derivation law. Requires the Malcev identity.
Subspace inder_malcev(const Algebra& A);
std::vector<Matrix> inder_malcev_maps(const Algebra& A);

struct SubAlgebra {
  Algebra alg;
  Matrix embedding;  // rows: images of the sub-basis in the ambient algebra
};

/// Structure constants induced on a product-closed subspace.
/// Throws if S is not closed under the product.
SubAlgebra restrict_to_subalgebra(const Algebra& A, const Subspace& S);

struct QuotientAlgebra {
  Algebra alg;
  Matrix projection;  // ambient_dim x quotient_dim, right action
  Matrix section;     // rows: the complement representatives in the ambient
};

/// Quotient by a verified ideal. The complement basis is the canonical one
/// determined by the non-pivot columns of the ideal's rref basis, so the
/// induced structure constants are reproducible across runs. The projection
/// is checked to be an algebra morphism on basis pairs.
QuotientAlgebra quotient(const Algebra& A, const Subspace& I);

}  // namespace trialg
