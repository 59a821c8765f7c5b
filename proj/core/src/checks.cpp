#include "trialg/checks.hpp"

#include "trialg/structure.hpp"

namespace trialg {

namespace {

Vec basis_vec(const Algebra& A, std::size_t i) { return unit_vec(A.dim(), i); }

std::string tuple_witness(const Algebra& A, std::initializer_list<std::size_t> idx,
                          const Vec& value) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ", ";
    s += A.label(i);
    first = false;
  }
  s += ") -> " + to_string(value);
  return s;
}

}  // namespace

Report check_anticommutative(const Algebra& A) {
  Report rep;
  rep.subject = "anticommutativity";
  CheckItem& item = rep.add("xy + yx = 0 on basis pairs");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i; j < A.dim(); ++j) {
      Vec v = zero_vec(A.dim());
      for (const auto& [k, ck] : A.basis_product(i, j)) v[k] += ck;
      for (const auto& [k, ck] : A.basis_product(j, i)) v[k] += ck;
      if (!is_zero(v)) rep.fail(item, tuple_witness(A, {i, j}, v));
    }
  return rep;
}

Vec jacobian(const Algebra& A, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = product(A, product(A, x, y), z);
  r = r + product(A, product(A, y, z), x);
  r = r + product(A, product(A, z, x), y);
  return r;
}

Report check_jacobi(const Algebra& A) {
  Report rep;
  rep.subject = "jacobi";
  CheckItem& item = rep.add("(xy)z + (yz)x + (zx)y = 0 on basis triples");
  std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        // accumulate the cyclic sum through the sparse tables
        Vec v = zero_vec(n);
        auto acc = [&](std::size_t a, std::size_t b, std::size_t c3) {
          for (const auto& [l, cl] : A.basis_product(a, b))
            for (const auto& [m, cm] : A.basis_product(l, c3)) v[m] += cl * cm;
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        if (!is_zero(v)) rep.fail(item, tuple_witness(A, {i, j, k}, v));
      }
  return rep;
}

namespace {

// ((xy)z)x + ((yz)x)x + ((zx)x)y - (xz)(yx)
Vec malcev_defect(const Algebra& A, const Vec& x, const Vec& y, const Vec& z) {
  Vec xy = product(A, x, y);
  Vec yz = product(A, y, z);
  Vec zx = product(A, z, x);
  Vec r = product(A, product(A, xy, z), x);
  r = r + product(A, product(A, yz, x), x);
  r = r + product(A, product(A, zx, x), y);
  r = r - product(A, product(A, x, z), product(A, y, x));
  return r;
}

}  // namespace

Report check_malcev(const Algebra& A) {
  Report rep;
  rep.subject = "malcev";
  Report anti = check_anticommutative(A);
  rep.merge(anti);
  std::size_t n = A.dim();

  // substitutions for the variable that occurs quadratically
  std::vector<std::pair<std::string, Vec>> xs;
  for (std::size_t i = 0; i < n; ++i) xs.emplace_back(A.label(i), basis_vec(A, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      xs.emplace_back(A.label(i) + "+" + A.label(j),
                      basis_vec(A, i) + basis_vec(A, j));

  CheckItem& item = rep.add("((xy)z)x + ((yz)x)x + ((zx)x)y = (xz)(yx), x polarized");
  for (const auto& [xname, x] : xs)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec d = malcev_defect(A, x, basis_vec(A, j), basis_vec(A, k));
        if (!is_zero(d))
          rep.fail(item, "(" + xname + ", " + A.label(j) + ", " + A.label(k) +
                             ") -> " + to_string(d));
      }

  // equivalent identities through the Jacobian: J(x*y, x, y) = 0 and
  // J(x,y,z)*x = J(x*z, x, y); passing the identity above implies these.
  CheckItem& f11 = rep.add("J(xy, x, y) = 0, x polarized");
  for (const auto& [xname, x] : xs)
    for (std::size_t j = 0; j < n; ++j) {
      Vec y = basis_vec(A, j);
      Vec d = jacobian(A, product(A, x, y), x, y);
      if (!is_zero(d))
        rep.fail(f11, "(" + xname + ", " + A.label(j) + ") -> " + to_string(d));
    }
  CheckItem& f12 = rep.add("J(x,y,z)x = J(xz, x, y), x polarized");
  for (const auto& [xname, x] : xs)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec y = basis_vec(A, j);
        Vec z = basis_vec(A, k);
        Vec d = product(A, jacobian(A, x, y, z), x) -
                jacobian(A, product(A, x, z), x, y);
        if (!is_zero(d))
          rep.fail(f12, "(" + xname + ", " + A.label(j) + ", " + A.label(k) +
                            ") -> " + to_string(d));
      }
  return rep;
}

Report simplicity_certificate(const Algebra& A) {
  Report rep;
  rep.subject = "simplicity certificate";
  Subspace full = Subspace::full(A.dim());

  CheckItem& perfect = rep.add("A^2 = A");
  if (A.dim() == 0) rep.fail(perfect, "zero algebra");
  Subspace sq = product_span(A, full, full);
  if (sq != full) rep.fail(perfect, "dim A^2 = " + std::to_string(sq.dim()));

  CheckItem& centre = rep.add("{x : xA = 0} = 0");
  // x with x*b_j = 0 for all j: stack the left-multiplication-by-basis data
  if (A.dim() > 0) {
    Matrix sys(A.dim(), A.dim() * A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j)
        for (const auto& [k, ck] : A.basis_product(i, j))
          sys.at(i, j * A.dim() + k) = ck;
    Subspace ann = left_kernel(sys);
    if (ann.dim() != 0)
      rep.fail(centre, "annihilator dimension " + std::to_string(ann.dim()));
  }

  CheckItem& form = rep.add("trace form nondegenerate");
  std::size_t r = rank(trace_form(A));
  rep.set_quantity("trace_form_rank", std::to_string(r));
  if (r != A.dim() || A.dim() == 0)
    rep.fail(form, "rank " + std::to_string(r) + " of " + std::to_string(A.dim()));

  CheckItem& gen = rep.add("every basis vector generates A as ideal");
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Subspace cl = ideal_closure(A, Subspace::span(A.dim(), {unit_vec(A.dim(), i)}));
    if (cl != full)
      rep.fail(gen, A.label(i) + " generates dim " + std::to_string(cl.dim()));
  }
  return rep;
}

}  // namespace trialg
