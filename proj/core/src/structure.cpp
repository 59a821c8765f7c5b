#include "trialg/structure.hpp"

#include <stdexcept>

#include "trialg/checks.hpp"

namespace trialg {

Subspace subalgebra_closure(const Algebra& A, const Subspace& gens) {
  Subspace cur = gens;
  for (;;) {
    Subspace next = subspace_sum(cur, product_span(A, cur, cur));
    if (next == cur) return cur;
    cur = next;
  }
}

Subspace ideal_closure(const Algebra& A, const Subspace& gens) {
  Subspace full = Subspace::full(A.dim());
  Subspace cur = gens;
  for (;;) {
    Subspace next = subspace_sum(cur, product_span(A, cur, full));
    next = subspace_sum(next, product_span(A, full, cur));
    if (next == cur) return cur;
    cur = next;
  }
}

bool is_ideal(const Algebra& A, const Subspace& I) {
  return ideal_closure(A, I) == I;
}

std::vector<Subspace> derived_series(const Algebra& A, const Subspace& S) {
  std::vector<Subspace> series{S};
  for (;;) {
    const Subspace& cur = series.back();
    Subspace next = product_span(A, cur, cur);
    if (next == cur) break;
    series.push_back(next);
    if (series.back().dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> derived_series(const Algebra& A) {
  return derived_series(A, Subspace::full(A.dim()));
}

bool is_solvable(const Algebra& A, const Subspace& S) {
  return derived_series(A, S).back().dim() == 0;
}

bool is_solvable(const Algebra& A) { return is_solvable(A, Subspace::full(A.dim())); }

Matrix trace_form(const Algebra& A) {
  std::size_t n = A.dim();
  std::vector<Matrix> ad(n);
  for (std::size_t i = 0; i < n; ++i) ad[i] = left_mult(A, unit_vec(n, i));
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& x = ad[i].at(p, q);
          if (!x.is_zero()) t += x * ad[j].at(q, p);
        }
      g.at(i, j) = t;
      g.at(j, i) = t;
    }
  return g;
}

Matrix killing_form(const Algebra& A) { return trace_form(A); }

Subspace solvable_radical_lie(const Algebra& A) {
  if (!check_anticommutative(A).ok() || !check_jacobi(A).ok())
    throw std::invalid_argument("solvable_radical_lie: input is not a Lie algebra");
  Subspace derived = product_span(A, Subspace::full(A.dim()), Subspace::full(A.dim()));
  Matrix g = killing_form(A);
  // x in radical iff x * g * d^T = 0 for every derived-subalgebra basis row d
  Matrix pairing = g * transpose(derived.basis());
  Subspace rad = left_kernel(pairing);
  if (!is_solvable(A, rad))
    throw std::logic_error("solvable_radical_lie: radical candidate is not solvable");
  return rad;
}

DerivationAlgebra derivation_algebra(const Algebra& A) {
  std::size_t n = A.dim();
  // unknowns: matrix entries M(p,q), equations over basis pairs (i,j):
  // sum_k c(i,j,k) M(k,q) - sum_p M(i,p) c(p,j,q) - sum_p M(j,p) c(i,p,q) = 0
  Matrix sys(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t row = (i * n + j) * n + q;
        for (const auto& [k, ck] : A.basis_product(i, j)) sys.at(row, k * n + q) += ck;
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& c1 = A.c(p, j, q);
          if (!c1.is_zero()) sys.at(row, i * n + p) -= c1;
          const Scalar& c2 = A.c(i, p, q);
          if (!c2.is_zero()) sys.at(row, j * n + p) -= c2;
        }
      }
  Subspace sols = kernel(sys);
  DerivationAlgebra result;
  for (std::size_t r = 0; r < sols.dim(); ++r)
    result.basis_maps.push_back(unflatten(sols.basis_row(r), n, n));

  std::vector<std::string> labels;
  for (std::size_t r = 0; r < sols.dim(); ++r) labels.push_back("D" + std::to_string(r));
  AlgebraBuilder builder(labels);
  for (std::size_t a = 0; a < result.basis_maps.size(); ++a)
    for (std::size_t b = 0; b < result.basis_maps.size(); ++b) {
      // operator commutator; with right-action matrices mat(A o B) = M_B M_A
      Matrix comm = result.basis_maps[b] * result.basis_maps[a] -
                    result.basis_maps[a] * result.basis_maps[b];
      auto coords = sols.coords(flatten(comm));
      if (!coords)
        throw std::logic_error("derivation_algebra: commutator escaped the span");
      builder.set_product(a, b, *coords);
    }
  result.alg = builder.build();
  return result;
}

Matrix inner_derivation(const Algebra& A, const Vec& x, const Vec& y) {
  // D(x,y) = L_[x,y] + [L_x, L_y]; operators compose left-to-right on rows,
  // so the operator commutator [L_x, L_y] has matrix My*Mx - Mx*My.
  Matrix mx = left_mult(A, x);
  Matrix my = left_mult(A, y);
  return left_mult(A, product(A, x, y)) + my * mx - mx * my;
}

namespace {

bool is_derivation(const Algebra& A, const Matrix& D) {
  std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = zero_vec(n);
      for (const auto& [k, ck] : A.basis_product(i, j)) {
        Vec img = unit_vec(n, k) * D;
        lhs = lhs + ck * img;
      }
      Vec rhs = product(A, unit_vec(n, i) * D, unit_vec(n, j)) +
                product(A, unit_vec(n, i), unit_vec(n, j) * D);
      if (!is_zero(lhs - rhs)) return false;
    }
  return true;
}

}  // namespace

std::vector<Matrix> inder_malcev_maps(const Algebra& A) {
  if (!check_malcev(A).ok())
    throw std::invalid_argument("inder_malcev: input fails the Malcev check");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      Matrix D = inner_derivation(A, unit_vec(A.dim(), i), unit_vec(A.dim(), j));
      if (!is_derivation(A, D))
        throw std::logic_error("inder_malcev: D(x,y) failed the derivation law");
      gens.push_back(D);
    }
  return gens;
}

Subspace inder_malcev(const Algebra& A) {
  std::vector<Vec> rows;
  for (const Matrix& D : inder_malcev_maps(A)) rows.push_back(flatten(D));
  return Subspace::span(A.dim() * A.dim(), rows);
}

SubAlgebra restrict_to_subalgebra(const Algebra& A, const Subspace& S) {
  std::size_t d = S.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
  AlgebraBuilder builder(labels);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec p = product(A, S.basis_row(i), S.basis_row(j));
      auto coords = S.coords(p);
      if (!coords)
        throw std::invalid_argument("restrict_to_subalgebra: subspace not closed");
      builder.set_product(i, j, *coords);
    }
  return SubAlgebra{builder.build(), S.basis()};
}

QuotientAlgebra quotient(const Algebra& A, const Subspace& I) {
  if (!is_ideal(A, I)) throw std::invalid_argument("quotient: subspace is not an ideal");
  std::size_t n = A.dim();
  std::vector<std::size_t> comp = complement_columns(I);
  std::size_t q = comp.size();
  Matrix proj = complement_projection(I);
  Matrix section(q, n);
  for (std::size_t ci = 0; ci < q; ++ci) section.at(ci, comp[ci]) = Scalar(1);

  std::vector<std::string> labels;
  for (std::size_t ci = 0; ci < q; ++ci) labels.push_back(A.label(comp[ci]));
  AlgebraBuilder builder(labels);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec p = product(A, section.row(i), section.row(j));
      builder.set_product(i, j, p * proj);
    }
  QuotientAlgebra result{builder.build(), proj, section};

  // the projection must be an algebra morphism on basis pairs
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = product(A, unit_vec(n, i), unit_vec(n, j)) * proj;
      Vec rhs = product(result.alg, unit_vec(n, i) * proj, unit_vec(n, j) * proj);
      if (!is_zero(lhs - rhs))
        throw std::logic_error("quotient: projection is not a morphism");
    }
  return result;
}

}  // namespace trialg
