#include "trialg/algebra.hpp"

#include <set>
#include <stdexcept>

namespace trialg {

Algebra::Algebra(std::vector<std::string> labels, std::vector<Scalar> sc)
    : dim_(labels.size()), labels_(std::move(labels)), sc_(std::move(sc)) {
  if (sc_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("Algebra: structure tensor must be dim^3");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw std::invalid_argument("Algebra: basis labels must be pairwise distinct");
  rows_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      SparseRow& r = rows_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) r.emplace_back(k, c(i, j, k));
    }
}

std::size_t Algebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("Algebra: no basis vector labeled '" + label + "'");
}

AlgebraBuilder::AlgebraBuilder(std::vector<std::string> labels)
    : labels_(std::move(labels)), sc_(labels_.size() * labels_.size() * labels_.size()) {}

std::size_t AlgebraBuilder::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("AlgebraBuilder: no basis vector labeled '" + label + "'");
}

void AlgebraBuilder::set(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
  sc_[(i * dim() + j) * dim() + k] = std::move(v);
}

void AlgebraBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  sc_[(i * dim() + j) * dim() + k] += v;
}

void AlgebraBuilder::set_product(std::size_t i, std::size_t j, const Vec& v) {
  if (v.size() != dim()) throw std::invalid_argument("set_product: length mismatch");
  for (std::size_t k = 0; k < dim(); ++k) sc_[(i * dim() + j) * dim() + k] = v[k];
}

const Scalar& AlgebraBuilder::get(std::size_t i, std::size_t j, std::size_t k) const {
  return sc_[(i * dim() + j) * dim() + k];
}

Vec product(const Algebra& A, const Vec& x, const Vec& y) {
  if (x.size() != A.dim() || y.size() != A.dim())
    throw std::invalid_argument("product: vector dimension mismatch");
  Vec r = zero_vec(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, ck] : A.basis_product(i, j)) r[k] += xy * ck;
    }
  }
  return r;
}

LinearMap left_mult(const Algebra& A, const Vec& x) {
  if (x.size() != A.dim()) throw std::invalid_argument("left_mult: dimension mismatch");
  Matrix m(A.dim(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (const auto& [k, ck] : A.basis_product(i, j)) m.at(j, k) += x[i] * ck;
  }
  return m;
}

Algebra direct_sum(const Algebra& A, const Algebra& B) {
  std::size_t n = A.dim() + B.dim();
  std::vector<std::string> labels = A.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : B.labels()) {
    std::string name = l;
    while (used.count(name)) name += "'";
    used.insert(name);
    labels.push_back(name);
  }
  AlgebraBuilder builder(labels);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (const auto& [k, ck] : A.basis_product(i, j)) builder.set(i, j, k, ck);
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j)
      for (const auto& [k, ck] : B.basis_product(i, j))
        builder.set(A.dim() + i, A.dim() + j, A.dim() + k, ck);
  return builder.build();
}

Subspace product_span(const Algebra& A, const Subspace& S, const Subspace& T) {
  std::vector<Vec> prods;
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = 0; j < T.dim(); ++j)
      prods.push_back(product(A, S.basis_row(i), T.basis_row(j)));
  return Subspace::span(A.dim(), prods);
}

}  // namespace trialg
