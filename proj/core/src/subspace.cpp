#include "trialg/subspace.hpp"

#include <stdexcept>

namespace trialg {

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(ambient));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& rows) {
  return row_space(Matrix::from_rows(rows, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
  return Subspace(m.cols(), rref_nonzero(m).reduced);
}

bool Subspace::contains(const Vec& v) const {
  return coords(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector length mismatch");
  if (basis_.rows() == 0) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve_in_rows(basis_, v);
}

Subspace Subspace::apply(const Matrix& m) const {
  if (m.rows() != ambient_) throw std::invalid_argument("Subspace: map dimension mismatch");
  return row_space(basis_ * m);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_row(i));
  return Subspace::row_space(stacked);
}

// Zassenhaus-style: a relation u*A + w*B = 0 exhibits u*A = -(w*B) in the
// intersection, and all intersection vectors arise this way.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
  std::size_t n = a.ambient_dim();
  Matrix stacked(a.dim() + b.dim(), n);
  for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_row(i));
  Subspace rel = left_kernel(stacked);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    Vec u = rel.basis_row(r);
    Vec x = zero_vec(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!u[i].is_zero()) x = x + u[i] * a.basis_row(i);
    gens.push_back(x);
  }
  return Subspace::span(n, gens);
}

Subspace kernel(const Matrix& m) {
  RrefResult rr = rref_nonzero(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(n);
    v[c] = Scalar(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = -rr.reduced.at(i, c);
    rows.push_back(v);
  }
  return Subspace::span(n, rows);
}

Subspace left_kernel(const Matrix& m) { return kernel(transpose(m)); }

std::vector<std::size_t> complement_columns(const Subspace& s) {
  RrefResult rr = rref_nonzero(s.basis());
  std::vector<bool> pivot(s.ambient_dim(), false);
  for (std::size_t p : rr.pivots) pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < s.ambient_dim(); ++c)
    if (!pivot[c]) comp.push_back(c);
  return comp;
}

Matrix complement_projection(const Subspace& s) {
  std::size_t n = s.ambient_dim();
  RrefResult rr = rref_nonzero(s.basis());
  std::vector<std::size_t> comp = complement_columns(s);
  Matrix proj(n, comp.size());
  for (std::size_t ci = 0; ci < comp.size(); ++ci) proj.at(comp[ci], ci) = Scalar(1);
  // a pivot coordinate e_p equals -sum of its complement entries modulo s
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    for (std::size_t ci = 0; ci < comp.size(); ++ci)
      proj.at(rr.pivots[r], ci) = -rr.reduced.at(r, comp[ci]);
  return proj;
}

}  // namespace trialg
