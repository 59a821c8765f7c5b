#pragma once

#include <optional>
#include <vector>

#include "trialg/matrix.hpp"

namespace trialg {

/// Linear subspace of k^n stored as a reduced row-echelon basis. The stored
/// basis is canonical, so two subspaces are equal iff their matrices are
/// identical.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }
  static Subspace full(std::size_t ambient);
  /// Row space of the given rows (any list, not necessarily independent).
  static Subspace span(std::size_t ambient, const std::vector<Vec>& rows);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis, if v lies in the subspace.
  std::optional<Vec> coords(const Vec& v) const;

  /// Image {b * m : b in this} under a right-action map.
  Subspace apply(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_;
  Matrix basis_;  // rref with no zero rows
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Right null space {v : m * v^T = 0} as a canonical Subspace of k^cols.
Subspace kernel(const Matrix& m);

/// {x : x * m = 0}, the kernel in the right-action convention.
Subspace left_kernel(const Matrix& m);

/// The non-pivot coordinates of the rref basis: the canonical complement.
std::vector<std::size_t> complement_columns(const Subspace& s);

/// ambient x (ambient - dim) right-action matrix that kills s and restricts
/// to the identity on the canonical complement coordinates.
Matrix complement_projection(const Subspace& s);

}  // namespace trialg
