#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trialg/matrix.hpp"
#include "trialg/subspace.hpp"

namespace trialg {

/// Finite-dimensional algebra over exact rationals given by structure
/// constants: b_i * b_j = sum_k c(i,j,k) b_k. Immutable after construction;
/// alongside the dense tensor a sparse per-pair product table is kept, which
/// keeps basis-tuple scans cheap on the mostly-sparse tables that occur here.
class Algebra {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

  Algebra() : dim_(0) {}
  Algebra(std::vector<std::string> labels, std::vector<Scalar> sc);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;  // throws if absent

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& sc() const { return sc_; }

  /// Nonzero components of b_i * b_j.
  const SparseRow& basis_product(std::size_t i, std::size_t j) const {
    return rows_[i * dim_ + j];
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.labels_ == b.labels_ && a.sc_ == b.sc_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> sc_;        // dim^3, row-major (i, j, k)
  std::vector<SparseRow> rows_;   // dim^2 sparse product rows
};

/// Incremental structure-constant assembly for the constructors.
class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  std::size_t index_of(const std::string& label) const;

  void set(std::size_t i, std::size_t j, std::size_t k, Scalar v);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  /// Sets b_i * b_j to the given vector (and nothing else).
  void set_product(std::size_t i, std::size_t j, const Vec& v);
  const Scalar& get(std::size_t i, std::size_t j, std::size_t k) const;

  Algebra build() const { return Algebra(labels_, sc_); }

 private:
  std::vector<std::string> labels_;
  std::vector<Scalar> sc_;
};

Vec product(const Algebra& A, const Vec& x, const Vec& y);

/// L_x : y -> x*y as a right-action matrix.
LinearMap left_mult(const Algebra& A, const Vec& x);

/// Block-diagonal sum; cross products vanish. Duplicate labels from the right
/// summand get a tick appended.
Algebra direct_sum(const Algebra& A, const Algebra& B);

/// Span of {s*t : s in S-basis, t in T-basis}.
Subspace product_span(const Algebra& A, const Subspace& S, const Subspace& T);

}  // namespace trialg
