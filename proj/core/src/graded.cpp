#include "trialg/graded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace trialg {

std::vector<std::size_t> GradedAlgebra::indices_of(int grade) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < grades.size(); ++i)
    if (grades[i] == grade) idx.push_back(i);
  return idx;
}

GradedAlgebra make_graded(Algebra alg, std::vector<int> grades) {
  if (grades.size() != alg.dim())
    throw std::invalid_argument("make_graded: one grade per basis vector required");
  std::set<int> gs(grades.begin(), grades.end());
  GradedAlgebra M{std::move(alg), std::move(grades), {gs.begin(), gs.end()}};
  return M;
}

Vec project_grade(const GradedAlgebra& M, const Vec& v, int g) {
  Vec r = v;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (M.grades[i] != g) r[i] = Scalar(0);
  return r;
}

Vec graded_product(const GradedAlgebra& M, const Vec& x, const Vec& y, int g) {
  return project_grade(M, product(M.alg, x, y), g);
}

std::size_t Contraction::index_of(std::size_t left, std::size_t right) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] == std::make_pair(left, right)) return i;
  throw std::invalid_argument("Contraction: no such basis pair");
}

Contraction contract(const GradedAlgebra& C, const GradedAlgebra& D) {
  if (C.grade_set != D.grade_set)
    throw std::invalid_argument("contract: grade sets do not match");

  Contraction con;
  std::vector<int> grades;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < C.alg.dim(); ++i)
    for (std::size_t j = 0; j < D.alg.dim(); ++j)
      if (C.grades[i] == D.grades[j]) {
        con.factors.emplace_back(i, j);
        grades.push_back(C.grades[i]);
        labels.push_back(C.alg.label(i) + "*" + D.alg.label(j));
      }

  std::size_t n = con.factors.size();
  AlgebraBuilder builder(labels);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [i, j] = con.factors[p];
      auto [k, l] = con.factors[q];
      // (c_i (x) d_j)(c_k (x) d_l) = sum over grade-matched component pairs
      for (const auto& [m, sm] : C.alg.basis_product(i, k))
        for (const auto& [nn, tn] : D.alg.basis_product(j, l)) {
          if (C.grades[m] != D.grades[nn]) continue;
          builder.add(p, q, con.index_of(m, nn), sm * tn);
        }
    }
  con.result = make_graded(builder.build(), grades);
  con.result.grade_set = C.grade_set;  // keep the full set even if unused
  return con;
}

namespace {

constexpr int kGrade0 = 0;
constexpr int kGrade2 = 2;

}  // namespace

Report check_graded_identities(const GradedAlgebra& M) {
  Report rep;
  rep.subject = "graded identities";
  for (int g : M.grade_set)
    if (g != kGrade0 && g != kGrade2)
      throw std::invalid_argument("check_graded_identities: grades must lie in {0,2}");

  const Algebra& A = M.alg;
  std::size_t n = A.dim();
  auto idx0 = M.indices_of(kGrade0);
  auto idx2 = M.indices_of(kGrade2);
  auto bv = [&](std::size_t i) { return unit_vec(n, i); };
  auto name = [&](std::size_t i) { return A.label(i); };

  CheckItem& closure = rep.add("(ab)_2 = (xa)_0 = (ax)_0 = 0");
  for (std::size_t a : idx0)
    for (std::size_t b : idx0)
      for (const auto& [k, ck] : A.basis_product(a, b))
        if (M.grades[k] == kGrade2)
          rep.fail(closure, "(" + name(a) + " " + name(b) + ")_2 != 0");
  for (std::size_t x : idx2)
    for (std::size_t a : idx0) {
      for (const auto& [k, ck] : A.basis_product(x, a))
        if (M.grades[k] == kGrade0)
          rep.fail(closure, "(" + name(x) + " " + name(a) + ")_0 != 0");
      for (const auto& [k, ck] : A.basis_product(a, x))
        if (M.grades[k] == kGrade0)
          rep.fail(closure, "(" + name(a) + " " + name(x) + ")_0 != 0");
    }

  CheckItem& f2 = rep.add("m^2 = 0 (polarized)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec v = zero_vec(n);
      for (const auto& [k, ck] : A.basis_product(i, j)) v[k] += ck;
      for (const auto& [k, ck] : A.basis_product(j, i)) v[k] += ck;
      if (!is_zero(v)) rep.fail(f2, "(" + name(i) + ", " + name(j) + ")");
    }

  CheckItem& f3 = rep.add("(mn)_i a = (ma n)_i + (m na)_i, i = 0,2");
  for (std::size_t mi = 0; mi < n; ++mi)
    for (std::size_t ni = 0; ni < n; ++ni)
      for (std::size_t a : idx0)
        for (int g : {kGrade0, kGrade2}) {
          Vec m = bv(mi), nn = bv(ni), av = bv(a);
          Vec lhs = product(A, project_grade(M, product(A, m, nn), g), av);
          Vec rhs = project_grade(M, product(A, product(A, m, av), nn), g) +
                    project_grade(M, product(A, m, product(A, nn, av)), g);
          if (!is_zero(lhs - rhs))
            rep.fail(f3, "(" + name(mi) + ", " + name(ni) + ", " + name(a) +
                             ")_" + std::to_string(g));
        }

  CheckItem& f4 = rep.add("6(xy)_0 z = ((xy)_2 z)_2 + ((zy)_2 x)_2 + ((xz)_2 y)_2");
  CheckItem& f5 = rep.add("((xy)_2 z)_0 + ((zx)_2 y)_0 + ((yz)_2 x)_0 = 0");
  for (std::size_t xi : idx2)
    for (std::size_t yi : idx2)
      for (std::size_t zi : idx2) {
        Vec x = bv(xi), y = bv(yi), z = bv(zi);
        Vec xy2 = graded_product(M, x, y, kGrade2);
        Vec lhs4 = Scalar(6) * product(A, graded_product(M, x, y, kGrade0), z);
        Vec rhs4 = graded_product(M, xy2, z, kGrade2) +
                   graded_product(M, graded_product(M, z, y, kGrade2), x, kGrade2) +
                   graded_product(M, graded_product(M, x, z, kGrade2), y, kGrade2);
        if (!is_zero(lhs4 - rhs4))
          rep.fail(f4, "(" + name(xi) + ", " + name(yi) + ", " + name(zi) + ")");
        Vec lhs5 = graded_product(M, xy2, z, kGrade0) +
                   graded_product(M, graded_product(M, z, x, kGrade2), y, kGrade0) +
                   graded_product(M, graded_product(M, y, z, kGrade2), x, kGrade0);
        if (!is_zero(lhs5))
          rep.fail(f5, "(" + name(xi) + ", " + name(yi) + ", " + name(zi) + ")");
      }
  return rep;
}

}  // namespace trialg
