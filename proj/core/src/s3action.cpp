#include "trialg/s3action.hpp"

#include <algorithm>
#include <stdexcept>

#include "trialg/structure.hpp"

namespace trialg {

std::vector<std::pair<Matrix, int>> group_elements(const S3Action& act) {
  const Matrix& s = act.sigma;
  const Matrix& r = act.rho;
  Matrix id = Matrix::identity(s.rows());
  return {{id, 1},      {r, 1},      {r * r, 1},
          {s, -1},      {s * r, -1}, {s * (r * r), -1}};
}

Report verify_action(const Algebra& A, const S3Action& act) {
  Report rep;
  rep.subject = "s3 action";
  std::size_t n = A.dim();
  const Matrix& s = act.sigma;
  const Matrix& r = act.rho;
  Matrix id = Matrix::identity(n);

  CheckItem& shape = rep.add("matrices are dim x dim");
  if (s.rows() != n || s.cols() != n || r.rows() != n || r.cols() != n) {
    rep.fail(shape, "shape mismatch");
    return rep;
  }

  CheckItem& rel = rep.add("sigma^2 = rho^3 = 1, sigma rho sigma = rho^2");
  if (!(s * s == id)) rep.fail(rel, "sigma^2 != 1");
  if (!(r * (r * r) == id)) rep.fail(rel, "rho^3 != 1");
  if (!(s * r * s == r * r)) rep.fail(rel, "sigma rho sigma != rho^2");

  CheckItem& autos = rep.add("(xy)^g = x^g y^g on basis pairs");
  for (const Matrix* g : {&s, &r}) {
    for (std::size_t i = 0; i < n && autos.witnesses.size() < 16; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec lhs = zero_vec(n);
        for (const auto& [k, ck] : A.basis_product(i, j))
          lhs = lhs + ck * (unit_vec(n, k) * *g);
        Vec rhs = product(A, unit_vec(n, i) * *g, unit_vec(n, j) * *g);
        if (!is_zero(lhs - rhs))
          rep.fail(autos, std::string(g == &s ? "sigma" : "rho") + " at (" +
                              A.label(i) + ", " + A.label(j) + ")");
      }
  }
  return rep;
}

namespace {

Matrix averaging_projector(const S3Action& act, bool with_sign) {
  auto elems = group_elements(act);
  std::size_t n = act.sigma.rows();
  Matrix sum(n, n);
  for (const auto& [g, sgn] : elems)
    sum = sum + (with_sign && sgn < 0 ? Scalar(-1) * g : g);
  return Scalar(1, 6) * sum;
}

}  // namespace

Subspace h_slice(const Algebra& A, const S3Action& act) {
  return h_slice(decompose(A, act), act);
}

Subspace h_slice(const IsotypicDecomposition& dec, const S3Action& act) {
  std::size_t n = act.sigma.rows();
  Subspace sigma_fixed = left_kernel(act.sigma - Matrix::identity(n));
  return subspace_intersect(dec.two_dim, sigma_fixed);
}

IsotypicDecomposition decompose(const Algebra& A, const S3Action& act) {
  std::size_t n = A.dim();
  Matrix e0 = averaging_projector(act, false);
  Matrix e1 = averaging_projector(act, true);
  Matrix e2 = Matrix::identity(n) - e0 - e1;

  // idempotent, pairwise orthogonal, summing to the identity
  if (!(e0 * e0 == e0) || !(e1 * e1 == e1) || !(e2 * e2 == e2))
    throw std::logic_error("decompose: projectors are not idempotent");
  if (!(e0 * e1).is_zero() || !(e0 * e2).is_zero() || !(e1 * e2).is_zero())
    throw std::logic_error("decompose: projectors are not orthogonal");

  IsotypicDecomposition dec;
  dec.fixed = Subspace::row_space(e0);
  dec.sign = Subspace::row_space(e1);
  dec.two_dim = Subspace::row_space(e2);
  if (dec.fixed.dim() + dec.sign.dim() + dec.two_dim.dim() != n)
    throw std::logic_error("decompose: component dimensions do not add up");
  for (const Matrix* g : {&act.sigma, &act.rho})
    for (const Subspace* sp : {&dec.fixed, &dec.sign, &dec.two_dim})
      if (sp->apply(*g) != *sp)
        throw std::logic_error("decompose: component is not S3-stable");

  // standard pairs: for each rref basis vector h of the sigma-fixed slice of
  // A_2, the unique standard pair in span{h, h^rho} with v + w = h is
  // v = -h^rho, w = h + h^rho.
  Subspace H = h_slice(dec, act);
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Vec h = H.basis_row(i);
    Vec hr = h * act.rho;
    Vec v = Scalar(-1) * hr;
    Vec w = h + hr;
    auto require = [&](const Vec& got, const Vec& want, const char* what) {
      if (!is_zero(got - want))
        throw std::logic_error(std::string("decompose: standard pair violates ") + what);
    };
    require(v * act.sigma, w, "v^sigma = w");
    require(w * act.sigma, v, "w^sigma = v");
    require(v * act.rho, w, "v^rho = w");
    require(w * act.rho, Scalar(-1) * (v + w), "w^rho = -v-w");
    dec.pairs.emplace_back(v, w);
  }
  if (2 * dec.pairs.size() != dec.two_dim.dim())
    throw std::logic_error("decompose: pair extraction missed part of A_2");
  std::vector<Vec> pair_rows;
  for (const auto& [v, w] : dec.pairs) {
    pair_rows.push_back(v);
    pair_rows.push_back(w);
  }
  if (Subspace::span(n, pair_rows) != dec.two_dim)
    throw std::logic_error("decompose: standard pairs do not span A_2");
  return dec;
}

TrialityResult is_triality(const Algebra& A, const S3Action& act) {
  std::size_t n = A.dim();
  Matrix id = Matrix::identity(n);
  // (sigma - 1)(1 + rho + rho^2) must annihilate everything
  Matrix defect = (act.sigma - id) * (id + act.rho + act.rho * act.rho);
  TrialityResult res;
  res.holds = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(unit_vec(n, i) * defect)) {
      res.holds = false;
      res.witness = unit_vec(n, i);
      break;
    }
  }
  bool no_sign_component = decompose(A, act).sign.dim() == 0;
  if (res.holds != no_sign_component)
    throw std::logic_error(
        "is_triality: defining identity and sign-component criteria disagree");
  return res;
}

std::vector<Subspace> invariant_ideals(const Algebra& A, const S3Action& act) {
  IsotypicDecomposition dec = decompose(A, act);
  auto elems = group_elements(act);
  std::vector<Subspace> found;
  for (const Subspace* piece : {&dec.fixed, &dec.sign, &dec.two_dim})
    for (std::size_t i = 0; i < piece->dim(); ++i) {
      Vec b = piece->basis_row(i);
      // the closure of an S3-stable generating set is S3-stable, because the
      // group acts by automorphisms
      std::vector<Vec> orbit;
      for (const auto& [g, sgn] : elems) orbit.push_back(b * g);
      Subspace cl = ideal_closure(A, Subspace::span(A.dim(), orbit));
      if (cl.dim() == 0 || cl.dim() == A.dim()) continue;
      if (std::find(found.begin(), found.end(), cl) == found.end())
        found.push_back(cl);
    }
  return found;
}

}  // namespace trialg
