#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "trialg/algebra.hpp"
#include "trialg/report.hpp"
#include "trialg/subspace.hpp"

namespace trialg {

/// S3 = <sigma, rho | sigma^2 = rho^3 = 1, sigma rho sigma = rho^2> acting on
/// an algebra by right-action matrices.
struct S3Action {
  LinearMap sigma;
  LinearMap rho;
};

/// The six group elements as matrices, paired with sgn: the identity and the
/// two 3-cycles have sign +1, the three involutions sign -1. Order:
/// 1, rho, rho^2, sigma, sigma*rho, sigma*rho^2 (words act left to right).
std::vector<std::pair<Matrix, int>> group_elements(const S3Action& act);

/// Group relations hold exactly and both generators are algebra
/// automorphisms, checked on all basis pairs.
Report verify_action(const Algebra& A, const S3Action& act);

struct IsotypicDecomposition {
  Subspace fixed;    // trivial isotypic component A_0
  Subspace sign;     // sign isotypic component (zero iff triality)
  Subspace two_dim;  // sum of the irreducible 2-dimensional modules, A_2
  /// Standard bases (v, w) of the 2-dimensional summands:
  /// v^sigma = w, w^sigma = v, v^rho = w, w^rho = -v-w.
  std::vector<std::pair<Vec, Vec>> pairs;
};

/// Splits the space by the group-averaging projectors e0 = (1/6) sum g and
/// e1 = (1/6) sum sgn(g) g, and extracts standard pairs from the sigma-fixed
/// slice of the 2-dimensional part. All projector identities and pair
/// relations are re-verified; violations raise std::logic_error.
IsotypicDecomposition decompose(const Algebra& A, const S3Action& act);

/// Sigma-fixed subspace of the 2-dimensional component; the slice that
/// carries the graded/Malcev side of the correspondence.
Subspace h_slice(const Algebra& A, const S3Action& act);
Subspace h_slice(const IsotypicDecomposition& dec, const S3Action& act);

struct TrialityResult {
  bool holds = false;
  std::optional<Vec> witness;  // a basis vector violating the defining identity
};

/// (x^sigma - x) + (x^sigma - x)^rho + (x^sigma - x)^rho^2 = 0 for all x,
/// checked on basis vectors (the condition is linear), and independently
/// sign-component = 0; the two criteria must agree or std::logic_error is
/// thrown, since their equivalence is an internal invariant.
TrialityResult is_triality(const Algebra& A, const S3Action& act);

/// Probe for proper invariant ideals: the S3-closed ideal closure of each
/// basis vector of each isotypic piece; returns the distinct proper nonzero
/// subspaces found.
std::vector<Subspace> invariant_ideals(const Algebra& A, const S3Action& act);

}  // namespace trialg
