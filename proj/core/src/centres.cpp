#include "trialg/centres.hpp"

#include <stdexcept>

#include "trialg/checks.hpp"

namespace trialg {

Subspace lie_centre(const MalcevAlgebra& M) {
  const Algebra& A = M.alg;
  std::size_t n = A.dim();
  if (n == 0) return Subspace::zero(0);
  std::size_t npairs = n * (n - 1) / 2;
  Matrix sys(n, std::max<std::size_t>(npairs, 1) * n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec J = jacobian(A, unit_vec(n, k), unit_vec(n, i), unit_vec(n, j));
        for (std::size_t c = 0; c < n; ++c) sys.at(k, col + c) = J[c];
      }
      col += n;
    }
  Subspace centre = left_kernel(sys);
  if (!centre.contains(product_span(A, centre, Subspace::full(n))))
    throw std::logic_error("lie_centre: centre is not an ideal");
  return centre;
}

TCentre t_centre(const TrialityAlgebra& A) {
  TCentre out;
  out.report.subject = "t-centre";
  std::size_t n = A.alg.dim();
  Subspace H = h_slice(A.dec, A.act);
  const Subspace& two = A.dec.two_dim;

  Matrix e0 = Matrix(n, n), e1 = Matrix(n, n);
  {
    auto elems = group_elements(A.act);
    for (const auto& [g, sgn] : elems) {
      e0 = e0 + g;
      e1 = e1 + (sgn < 0 ? Scalar(-1) * g : g);
    }
    e0 = Scalar(1, 6) * e0;
    e1 = Scalar(1, 6) * e1;
  }
  Matrix e2 = Matrix::identity(n) - e0 - e1;

  // substitutions for the quadratic variable y: basis vectors and pair sums
  std::vector<Vec> ys;
  for (std::size_t i = 0; i < two.dim(); ++i) ys.push_back(two.basis_row(i));
  for (std::size_t i = 0; i < two.dim(); ++i)
    for (std::size_t j = i + 1; j < two.dim(); ++j)
      ys.push_back(two.basis_row(i) + two.basis_row(j));

  auto defect = [&](const Vec& x, const Vec& y) {
    Vec ysig = y * A.act.sigma;
    Vec xy2 = product(A.alg, x, y) * e2;
    Vec xys2 = product(A.alg, x, ysig) * e2;
    Vec yys2 = product(A.alg, y, ysig) * e2;
    Vec r = product(A.alg, xy2, y) * e2;
    r = r - product(A.alg, xys2, ysig) * e2;
    r = r - product(A.alg, x, yys2) * e2;
    return r;
  };

  if (H.dim() == 0) {
    out.t1 = Subspace::zero(n);
  } else {
    Matrix sys(H.dim(), std::max<std::size_t>(ys.size(), 1) * n);
    for (std::size_t k = 0; k < H.dim(); ++k)
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        Vec d = defect(H.basis_row(k), ys[yi]);
        for (std::size_t c = 0; c < n; ++c) sys.at(k, yi * n + c) = d[c];
      }
    Subspace coords = left_kernel(sys);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < coords.dim(); ++r)
      rows.push_back(coords.basis_row(r) * H.basis());
    out.t1 = Subspace::span(n, rows);
  }

  out.t2 = subspace_sum(out.t1, out.t1.apply(A.act.rho));
  CheckItem& stab = out.report.add("T1 + T1^rho is rho^2-stable");
  if (out.t2.apply(A.act.rho * A.act.rho) != out.t2)
    out.report.fail(stab, "adjoining T1^rho^2 would enlarge T2");

  out.t0 = subspace_intersect(product_span(A.alg, out.t2, Subspace::full(n)),
                              A.dec.fixed);
  out.centre = subspace_sum(out.t0, out.t2);

  CheckItem& inv = out.report.add("t-centre is S3-invariant");
  if (out.centre.apply(A.act.sigma) != out.centre ||
      out.centre.apply(A.act.rho) != out.centre)
    out.report.fail(inv, "not stable under the action");
  CheckItem& ideal = out.report.add("t-centre is an ideal");
  if (!out.centre.contains(product_span(A.alg, out.centre, Subspace::full(n))) ||
      !out.centre.contains(product_span(A.alg, Subspace::full(n), out.centre)))
    out.report.fail(ideal, "product escapes the t-centre");

  out.report.set_quantity("t1_dim", std::to_string(out.t1.dim()));
  out.report.set_quantity("t2_dim", std::to_string(out.t2.dim()));
  out.report.set_quantity("t0_dim", std::to_string(out.t0.dim()));
  out.report.set_quantity("t_centre_dim", std::to_string(out.centre.dim()));
  return out;
}

Report centre_correspondence(const TrialityAlgebra& A) {
  Report rep;
  rep.subject = "centre correspondence";
  TCentre tc = t_centre(A);
  rep.merge(tc.report);

  FResult f = functor_F(A);
  std::size_t n = A.alg.dim();
  std::size_t m2 = f.slice_rows.rows();

  Subspace inA2 = subspace_intersect(tc.centre, A.dec.two_dim);
  Subspace sigma_fixed = left_kernel(A.act.sigma - Matrix::identity(n));
  Subspace slice_ambient = subspace_intersect(inA2, sigma_fixed);
  std::vector<Vec> coords;
  for (std::size_t r = 0; r < slice_ambient.dim(); ++r) {
    auto c = solve_in_rows(f.slice_rows, slice_ambient.basis_row(r));
    if (!c) throw std::logic_error("centre_correspondence: slice escaped H");
    coords.push_back(*c);
  }
  Subspace lhs = Subspace::span(m2, coords);
  Subspace rhs = lie_centre(f.malcev);

  rep.set_quantity("f_t_centre_dim", std::to_string(lhs.dim()));
  rep.set_quantity("lie_centre_dim", std::to_string(rhs.dim()));
  CheckItem& eq = rep.add("F(T(A)) equals the Lie centre of F(A)");
  if (lhs != rhs)
    rep.fail(eq, "subspaces differ (dims " + std::to_string(lhs.dim()) + " vs " +
                     std::to_string(rhs.dim()) + ")");
  return rep;
}

Report quotient_centre_check(const TrialityAlgebra& A) {
  Report rep;
  rep.subject = "t-centre of the quotient by the t-centre";
  std::size_t n = A.alg.dim();
  Subspace full = Subspace::full(n);
  if (product_span(A.alg, full, full) != full && n > 0) {
    rep.set_quantity("status", "hypothesis-not-met");
    return rep;
  }
  rep.set_quantity("status", "checked");
  TCentre tc = t_centre(A);
  rep.set_quantity("t_centre_dim", std::to_string(tc.centre.dim()));
  TrialityAlgebra q = quotient_triality(A, tc.centre);
  TCentre tq = t_centre(q);
  rep.set_quantity("quotient_dim", std::to_string(q.alg.dim()));
  CheckItem& zero = rep.add("t-centre of the quotient is zero");
  if (tq.centre.dim() != 0)
    rep.fail(zero, "dimension " + std::to_string(tq.centre.dim()));
  return rep;
}

}  // namespace trialg
