#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trialg/matrix.hpp"
#include "trialg/subspace.hpp"

using namespace trialg;
using testutil::Rng;

TEST_CASE("scalar arithmetic is exact and canonical") {
  CHECK(Scalar(2, 6).str() == "1/3");
  CHECK(Scalar(1, -2).str() == "-1/2");  // positive denominator enforced
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
  CHECK((Scalar(2, 3) * Scalar(3, 2)).is_one());
  CHECK(Scalar::parse("-7/21") == Scalar(-1, 3));
  CHECK(Scalar::parse("5").str() == "5");
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(1, 2) / Scalar(0), std::invalid_argument);
}

TEST_CASE("rref fixed points and the forced rank-1 case") {
  Matrix id = Matrix::identity(2);
  CHECK(rref(id) == id);

  Matrix m(2, 2);
  m.at(0, 0) = Scalar(2);
  m.at(0, 1) = Scalar(4);
  m.at(1, 0) = Scalar(1);
  m.at(1, 1) = Scalar(2);
  Matrix want(2, 2);
  want.at(0, 0) = Scalar(1);
  want.at(0, 1) = Scalar(2);
  CHECK(rref(m) == want);
}

// oracle: two matrices have the same row space iff each row of one is a
// solvable combination of the rows of the other
static bool same_row_space(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!solve_in_rows(b, a.row(i))) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!solve_in_rows(a, b.row(i))) return false;
  return true;
}

TEST_CASE("rref preserves the row space and is idempotent") {
  Rng rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = rng.matrix(5, 5);
    Matrix r = rref(m);
    CHECK(same_row_space(m, r));
    CHECK(rref(r) == r);
  }
}

TEST_CASE("kernel basics and rank-nullity") {
  CHECK(kernel(Matrix(3, 3)).dim() == 3);
  CHECK(kernel(Matrix::identity(3)).dim() == 0);

  Matrix row(1, 3);
  row.at(0, 0) = Scalar(1);
  row.at(0, 1) = Scalar(1);
  Subspace k = kernel(row);
  CHECK(k.dim() == 2);
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vec v = k.basis_row(i);
    CHECK((v[0] + v[1]).is_zero());
  }

  Rng rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = rng.matrix(4, 6);
    CHECK(rank(m) + kernel(m).dim() == 6);
    Subspace k2 = kernel(m);
    for (std::size_t i = 0; i < k2.dim(); ++i) {
      Vec prod = k2.basis_row(i) * transpose(m);
      CHECK(is_zero(prod));
    }
  }
}

TEST_CASE("solve returns exact solutions or reports unsolvability") {
  Vec rhs{Scalar(3), Scalar(-1, 2)};
  auto x = solve(Matrix::identity(2), rhs);
  REQUIRE(x);
  CHECK(*x == rhs);

  Matrix bad(2, 2);
  bad.at(0, 0) = Scalar(1);
  bad.at(1, 0) = Scalar(1);
  CHECK_FALSE(solve(bad, Vec{Scalar(1), Scalar(2)}));

  // oracle: substitute the solution back
  Rng rng(999);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = rng.matrix(4, 5);
    Vec x0 = rng.vec(5);
    Vec rhs2 = x0 * transpose(m);  // m * x0^T
    auto sol = solve(m, rhs2);
    REQUIRE(sol);
    CHECK(*sol * transpose(m) == rhs2);
  }
}

TEST_CASE("subspace identities and canonical equality") {
  Rng rng(4242);
  Subspace a = Subspace::span(4, {rng.vec(4), rng.vec(4)});
  CHECK(subspace_sum(a, Subspace::zero(4)) == a);
  CHECK(subspace_intersect(a, Subspace::full(4)) == a);

  Subspace e1 = Subspace::span(2, {unit_vec(2, 0)});
  Subspace e2 = Subspace::span(2, {unit_vec(2, 1)});
  CHECK(subspace_intersect(e1, e2).dim() == 0);

  // same row space in a different presentation yields the identical basis
  Vec u = rng.vec(3), v = rng.vec(3);
  Subspace s1 = Subspace::span(3, {u, v});
  Subspace s2 = Subspace::span(3, {Scalar(3) * v, u + v, Scalar(2) * u});
  CHECK(s1 == s2);
}

TEST_CASE("dimension formula on random subspaces") {
  Rng rng(31415);
  for (int trial = 0; trial < 20; ++trial) {
    Subspace a = Subspace::span(6, {rng.vec(6), rng.vec(6), rng.vec(6)});
    Subspace b = Subspace::span(6, {rng.vec(6), rng.vec(6)});
    CHECK(a.dim() + b.dim() ==
          subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());
  }
}

TEST_CASE("intersection members lie in both subspaces") {
  Rng rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace a = Subspace::span(5, {rng.vec(5), rng.vec(5), rng.vec(5)});
    Subspace b = Subspace::span(5, {rng.vec(5), rng.vec(5), rng.vec(5)});
    Subspace c = subspace_intersect(a, b);
    for (std::size_t i = 0; i < c.dim(); ++i) {
      CHECK(a.contains(c.basis_row(i)));
      CHECK(b.contains(c.basis_row(i)));
    }
  }
}

TEST_CASE("ambient dimension mismatches are rejected") {
  Subspace a = Subspace::full(3);
  Subspace b = Subspace::full(4);
  CHECK_THROWS_AS(subspace_sum(a, b), std::invalid_argument);
  CHECK_THROWS_AS(subspace_intersect(a, b), std::invalid_argument);
}

TEST_CASE("complement projection kills the subspace and fixes a complement") {
  Rng rng(555);
  Subspace s = Subspace::span(5, {rng.vec(5), rng.vec(5)});
  Matrix pm = complement_projection(s);
  for (std::size_t i = 0; i < s.dim(); ++i) CHECK(is_zero(s.basis_row(i) * pm));
  CHECK(rank(pm) == 5 - s.dim());
}
