#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trialg/checks.hpp"
#include "trialg/constructions.hpp"
#include "trialg/structure.hpp"

using namespace trialg;

namespace {

Vec bv(const Algebra& A, const std::string& label) {
  return unit_vec(A.dim(), A.index_of(label));
}

const D4Result& d4() {
  static D4Result cached = make_d4();
  return cached;
}

}  // namespace

TEST_CASE("lambda products follow the defining table") {
  LambdaAlgebra lam = make_lambda();
  const Algebra& L = lam.graded.alg;
  Vec a = bv(L, "a"), v = bv(L, "v"), w = bv(L, "w");
  CHECK(product(L, a, a) == a);
  CHECK(product(L, a, v) == v);
  CHECK(product(L, v, v) == Scalar(1, 3) * (v + Scalar(2) * a));
  CHECK(product(L, w, w) == Scalar(1, 3) * (w + Scalar(2) * a));
  CHECK(product(L, v, w) == Scalar(-1, 3) * (v + w + a));
  CHECK(product(L, w, v) == product(L, v, w));
  CHECK(lam.graded.grades == std::vector<int>{0, 2, 2});
}

TEST_CASE("gamma: sl2 action on the odd part and symmetric odd products") {
  GradedAlgebra g = make_gamma();
  const Algebra& G = g.alg;
  CHECK(G.dim() == 5);
  CHECK(product(G, bv(G, "w2"), bv(G, "h")) == Scalar(2) * bv(G, "w2"));
  CHECK(product(G, bv(G, "w2"), bv(G, "e")) == Scalar(-2) * bv(G, "w-2"));
  CHECK(is_zero(product(G, bv(G, "w-2"), bv(G, "e"))));
  CHECK(product(G, bv(G, "w-2"), bv(G, "f")) == Scalar(2) * bv(G, "w2"));
  CHECK(product(G, bv(G, "w2"), bv(G, "w2")) == Scalar(-2) * bv(G, "f"));
  CHECK(product(G, bv(G, "w2"), bv(G, "w-2")) == bv(G, "h"));
  CHECK(product(G, bv(G, "w-2"), bv(G, "w2")) == bv(G, "h"));
  CHECK(product(G, bv(G, "w-2"), bv(G, "w-2")) == Scalar(-2) * bv(G, "e"));
  CHECK(product(G, bv(G, "e"), bv(G, "w2")) ==
        Scalar(-1) * product(G, bv(G, "w2"), bv(G, "e")));
}

TEST_CASE("osp: the 5-dimensional Z2-graded algebra") {
  GradedAlgebra o = make_osp();
  const Algebra& O = o.alg;
  CHECK(product(O, bv(O, "v1"), bv(O, "f")) == bv(O, "v-1"));
  CHECK(product(O, bv(O, "v1"), bv(O, "v1")) == bv(O, "e"));
  CHECK(product(O, bv(O, "v1"), bv(O, "v-1")) == bv(O, "h"));
  CHECK(product(O, bv(O, "v-1"), bv(O, "v-1")) == bv(O, "f"));
  CHECK(o.grade_set == std::vector<int>{0, 1});
}

TEST_CASE("t7 seed") {
  GradedAlgebra t = make_t7seed();
  const Algebra& T = t.alg;
  CHECK(product(T, bv(T, "x"), bv(T, "y")) == bv(T, "t"));
  CHECK(product(T, bv(T, "y"), bv(T, "x")) == Scalar(-1) * bv(T, "t"));
  CHECK(product(T, bv(T, "t"), bv(T, "x")) == bv(T, "x"));
  CHECK(is_zero(product(T, bv(T, "x"), bv(T, "x"))));
}

TEST_CASE("contraction dimensions and the zero algebra") {
  Contraction c = contract(make_t7seed(), make_gamma());
  CHECK(c.result.alg.dim() == 7);

  GradedAlgebra zero = make_graded(Algebra({}, {}), {});
  zero.grade_set = make_gamma().grade_set;
  Contraction z = contract(zero, make_gamma());
  CHECK(z.result.alg.dim() == 0);

  GradedAlgebra lam = make_lambda().graded;
  CHECK_THROWS_AS(contract(make_t7seed(), lam), std::invalid_argument);
}

TEST_CASE("the 7-dimensional contraction is simple Malcev but not Lie") {
  Contraction c = contract(make_t7seed(), make_gamma());
  CHECK(check_anticommutative(c.result.alg).ok());
  CHECK(check_malcev(c.result.alg).ok());
  CHECK_FALSE(check_jacobi(c.result.alg).ok());
  CHECK(simplicity_certificate(c.result.alg).ok());
}

TEST_CASE("T(L) construction and gates") {
  AlgebraWithAction tl = make_TL(make_sl2());
  CHECK(tl.alg.dim() == 9);
  CHECK(check_jacobi(tl.alg).ok());
  CHECK_THROWS_AS(make_TL(make_t7seed().alg), std::invalid_argument);
}

TEST_CASE("compatible pairs and T(A,B)") {
  Algebra sl2 = make_sl2();
  std::size_t n = 3;

  // T(L, L) recovers T(L)
  CompatiblePair all{Subspace::full(n), Subspace::full(n)};
  CHECK(check_compatible(sl2, all).ok());
  InvariantSubalgebra tll = make_TAB(sl2, all);
  AlgebraWithAction tl = make_TL(sl2);
  CHECK(tll.alg.dim() == 9);
  CHECK(tll.alg.sc() == tl.alg.sc());

  // T(L, 0) is the diagonal copy of L
  CompatiblePair diag{Subspace::full(n), Subspace::zero(n)};
  InvariantSubalgebra tdiag = make_TAB(sl2, diag);
  CHECK(tdiag.alg.dim() == 3);
  CHECK(check_jacobi(tdiag.alg).ok());
  CHECK(simplicity_certificate(tdiag.alg).ok());  // still sl2

  // a compatible pair with both parts proper: A = span{e}, B = span{h, e}
  CompatiblePair borel{Subspace::span(n, {bv(sl2, "e")}),
                       Subspace::span(n, {bv(sl2, "h"), bv(sl2, "e")})};
  CHECK(check_compatible(sl2, borel).ok());
  InvariantSubalgebra tb = make_TAB(sl2, borel);
  CHECK(tb.alg.dim() == 5);
  CHECK(check_jacobi(tb.alg).ok());

  // the pair (span{h}, span{e,f}) satisfies B^2 in A and AB in B, but B is
  // not a subalgebra, so the spanned subspace is not product-closed and the
  // construction refuses it
  CompatiblePair broken{Subspace::span(n, {bv(sl2, "h")}),
                        Subspace::span(n, {bv(sl2, "e"), bv(sl2, "f")})};
  CHECK(check_compatible(sl2, broken).ok());
  CHECK_THROWS_AS(make_TAB(sl2, broken), std::logic_error);
}

TEST_CASE("d4: pinned products from the table") {
  const Algebra& L = d4().alg;
  CHECK(L.dim() == 28);

  CHECK(product(L, bv(L, "e1"), bv(L, "f1")) == bv(L, "h1"));
  CHECK(product(L, bv(L, "e1"), bv(L, "h1")) == Scalar(2) * bv(L, "e1"));
  CHECK(product(L, bv(L, "h1"), bv(L, "f1")) == Scalar(2) * bv(L, "f1"));
  CHECK(is_zero(product(L, bv(L, "e1"), bv(L, "e2"))));
  CHECK(is_zero(product(L, bv(L, "e1"), bv(L, "f2"))));

  // e_i adjoins, f_i removes, h_i signs
  CHECK(product(L, bv(L, "e1"), bv(L, "m24")) == bv(L, "m124"));
  CHECK(is_zero(product(L, bv(L, "e1"), bv(L, "m124"))));
  CHECK(product(L, bv(L, "m12"), bv(L, "f1")) == bv(L, "m2"));
  CHECK(product(L, bv(L, "m12"), bv(L, "h1")) == bv(L, "m12"));
  CHECK(product(L, bv(L, "m12"), bv(L, "h3")) == Scalar(-1) * bv(L, "m12"));

  // the Cartan-valued subset product keeps its printed value
  Vec got = product(L, bv(L, "m1"), bv(L, "m234"));
  Vec want =
      Scalar(-1, 2) * (bv(L, "h2") + bv(L, "h3") + bv(L, "h4") - bv(L, "h1"));
  CHECK(got == want);
}

TEST_CASE("d4: gates and the recorded sign repair") {
  const D4Result& r = d4();
  CHECK(check_anticommutative(r.alg).ok());
  CHECK(check_jacobi(r.alg).ok());
  CHECK(verify_action(r.alg, r.act).ok());
  CHECK(is_triality(r.alg, r.act).holds);

  // the printed table required a repair, and the repair is on record
  CHECK(r.construction_report.quantities.count("chosen_flips") == 1);

  IsotypicDecomposition dec = decompose(r.alg, r.act);
  CHECK(dec.fixed.dim() == 14);
  CHECK(dec.sign.dim() == 0);
  CHECK(dec.two_dim.dim() == 14);
  CHECK(dec.pairs.size() == 7);

  CHECK(rank(killing_form(r.alg)) == 28);
}

TEST_CASE("d4: no proper invariant ideals") {
  CHECK(invariant_ideals(d4().alg, d4().act).empty());
}
