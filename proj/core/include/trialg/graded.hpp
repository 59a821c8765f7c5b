#pragma once

#include <utility>
#include <vector>

#include "trialg/algebra.hpp"
#include "trialg/report.hpp"
#include "trialg/subspace.hpp"

namespace trialg {

/// Algebra whose basis vectors carry grades from a finite grade set; the
/// contraction machinery is generic in the grade set, which covers both the
/// {0,2} grading of the triality correspondence and the Z2 gradings of the
/// seed algebras.
struct GradedAlgebra {
  Algebra alg;
  std::vector<int> grades;     // one grade per basis vector
  std::vector<int> grade_set;  // sorted distinct grades

  std::vector<std::size_t> indices_of(int grade) const;
  std::size_t grade_dim(int grade) const { return indices_of(grade).size(); }
};

GradedAlgebra make_graded(Algebra alg, std::vector<int> grades);

/// Zeroes every coordinate whose basis grade differs from g.
Vec project_grade(const GradedAlgebra& M, const Vec& v, int g);

/// Grade-g projection of the product x*y.
Vec graded_product(const GradedAlgebra& M, const Vec& x, const Vec& y, int g);

/// Grade-matched tensor contraction: basis {c_i (x) d_j : grade match} with
/// (c (x) d)(c' (x) d') = sum_g (cc')_g (x) (dd')_g.
struct Contraction {
  GradedAlgebra result;
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // (left, right) index
  std::size_t index_of(std::size_t left, std::size_t right) const;
};
Contraction contract(const GradedAlgebra& C, const GradedAlgebra& D);

/// Membership test for the variety carved out by the graded identities of the
/// {0,2} world: the grade-closure rules (ab)_2 = (xa)_0 = (ax)_0 = 0, the
/// polarized square-zero identity, the grade-0 right-multiplication
/// derivation law, and the two cyclic grade-2 identities
///   6(xy)_0 z = ((xy)_2 z)_2 + ((zy)_2 x)_2 + ((xz)_2 y)_2,
///   ((xy)_2 z)_0 + ((zx)_2 y)_0 + ((yz)_2 x)_0 = 0.
Report check_graded_identities(const GradedAlgebra& M);

}  // namespace trialg
