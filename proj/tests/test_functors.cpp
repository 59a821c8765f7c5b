#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trialg/checks.hpp"
#include "trialg/constructions.hpp"
#include "trialg/functors.hpp"

using namespace trialg;

namespace {

Algebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("z" + std::to_string(i));
  return AlgebraBuilder(labels).build();
}

TrialityAlgebra triality_TL(const Algebra& L) {
  AlgebraWithAction tl = make_TL(L);
  return make_triality(tl.alg, tl.act);
}

const TrialityAlgebra& d4_triality() {
  static TrialityAlgebra cached = [] {
    D4Result r = make_d4();
    return make_triality(r.alg, r.act);
  }();
  return cached;
}

TrialityAlgebra zero_triality() {
  return make_triality(Algebra({}, {}), S3Action{Matrix(0, 0), Matrix(0, 0)});
}

}  // namespace

TEST_CASE("psi splits T(sl2) into 3 + 3") {
  TrialityAlgebra t = triality_TL(make_sl2());
  PsiResult p = psi(t);
  CHECK(p.m0_rows.rows() == 3);
  CHECK(p.m2_rows.rows() == 3);
  CHECK(p.graded.alg.dim() == 6);
  CHECK(check_graded_identities(p.graded).ok());
}

TEST_CASE("psi0 of a trivial-triality image is Lie") {
  TrialityAlgebra t = triality_TL(make_sl2());
  MalcevAlgebra m = psi0(psi(t).graded);
  CHECK(m.alg.dim() == 3);
  CHECK(check_jacobi(m.alg).ok());
}

TEST_CASE("F on T(sl2) gives a 3-dimensional simple Lie algebra") {
  FResult f = functor_F(triality_TL(make_sl2()));
  CHECK(f.malcev.alg.dim() == 3);
  CHECK(check_jacobi(f.malcev.alg).ok());
  CHECK(rank(killing_form(f.malcev.alg)) == 3);
}

TEST_CASE("F of the zero algebra is zero") {
  FResult f = functor_F(zero_triality());
  CHECK(f.malcev.alg.dim() == 0);
}

TEST_CASE("phi0 on sl2 as a Malcev algebra") {
  Phi0Result g = phi0(make_malcev(make_sl2()));
  CHECK(g.inder_span.dim() == 3);  // ad(sl2)
  CHECK(g.graded.alg.dim() == 6);
  CHECK(check_graded_identities(g.graded).ok());
}

TEST_CASE("phi0 of an abelian Malcev algebra has zero grade-0 part") {
  Phi0Result g = phi0(make_malcev(abelian(2)));
  CHECK(g.inder_span.dim() == 0);
  CHECK(g.graded.alg.dim() == 2);
}

TEST_CASE("phi dimensions and gates") {
  TrialityAlgebra t = triality_TL(make_sl2());
  PsiResult p = psi(t);
  PhiResult ph = phi(p.graded);
  CHECK(ph.triality.alg.dim() == 3 + 2 * 3);
  CHECK(check_jacobi(ph.triality.alg).ok());
}

TEST_CASE("contraction roundtrip: contract(psi(L), Lambda) is isomorphic to L") {
  ContractionRoundtrip r = contraction_roundtrip(triality_TL(make_sl2()));
  CHECK(r.report.ok());
}

TEST_CASE("G on F(T(sl2)) and the roundtrip report") {
  TrialityAlgebra t = triality_TL(make_sl2());
  RoundtripResult r = roundtrip_check(t);
  CHECK(r.report.ok());
  CHECK(r.report.quantities.at("normal") == "true");
  REQUIRE(r.iso);
}

TEST_CASE("the roundtrip reports a concrete obstruction for T(abelian)") {
  TrialityAlgebra t = triality_TL(abelian(2));
  NormalityResult n = is_normal(t);
  CHECK_FALSE(n.normal);
  CHECK(n.annihilator.dim() == 2);  // the whole diagonal annihilates A_2

  RoundtripResult r = roundtrip_check(t);
  CHECK_FALSE(r.report.ok());
  CHECK(r.report.quantities.at("normal") == "false");
  CHECK(r.report.quantities.at("dim_GFL") == "4");  // 0 + 2*2 against dim 6
  bool mentions_dim = false;
  for (const auto& c : r.report.checks)
    for (const auto& w : c.witnesses)
      if (w.find("dim") != std::string::npos) mentions_dim = true;
  CHECK(mentions_dim);
}

TEST_CASE("N and K") {
  TrialityAlgebra tsl2 = triality_TL(make_sl2());
  CHECK(N_of(tsl2).dim() == 0);

  TrialityAlgebra tab = triality_TL(abelian(2));
  Subspace n = N_of(tab);
  CHECK(n.dim() == 2);
  // N(T(L)) is the diagonal copy {l_1 + l_2 + l_3 : l in Z(L)}; basis order
  // of T(L) is copy-major: z0_1 z1_1 z0_2 z1_2 z0_3 z1_3
  Vec diag = zero_vec(6);
  diag[0] = diag[2] = diag[4] = Scalar(1);
  CHECK(n.contains(diag));

  KResult k = K_of(tsl2);
  CHECK(k.core.dim() == 9);  // A_2 generates everything
  CHECK(k.algebra.alg.dim() == 9);
  CHECK(k.algebra.alg.sc() == tsl2.alg.sc());

  // K of T(abelian): core = A_2 (4-dim), N cap core = 0
  KResult ka = K_of(tab);
  CHECK(ka.core.dim() == 4);
  CHECK(ka.algebra.alg.dim() == 4);
}

TEST_CASE("inder_relative base cases") {
  MalcevAlgebra m = make_malcev(make_sl2());
  CHECK(inder_relative(m, Subspace::full(3)) == inder_malcev(m.alg));
  CHECK(inder_relative(m, Subspace::zero(3)).dim() == 0);
  CHECK_THROWS_AS(inder_relative(m, Subspace::span(3, {unit_vec(3, 0)})),
                  std::invalid_argument);
}

TEST_CASE("triviality_check") {
  Report t1 = triviality_check(triality_TL(make_sl2()));
  CHECK(t1.ok());
  CHECK(t1.quantities.at("trivial") == "true");

  // phi(phi0(Lie algebra)) is trivial by construction
  Phi0Result g = phi0(make_malcev(make_sl2()));
  PhiResult ph = phi(g.graded);
  Report t2 = triviality_check(ph.triality);
  CHECK(t2.quantities.at("trivial") == "true");
}

TEST_CASE("malcev radical of solvable and mixed inputs") {
  // F(T(b2)) is 2-dimensional solvable: the radical is everything
  FResult fb2 = functor_F(triality_TL(make_b2()));
  CHECK(malcev_radical(fb2.malcev) == Subspace::full(2));

  FResult fsl2 = functor_F(triality_TL(make_sl2()));
  CHECK(malcev_radical(fsl2.malcev).dim() == 0);
}

TEST_CASE("F after G is the identity on structure constants") {
  // the canonical slice of G(M) reproduces M exactly, for every Malcev
  // algebra in the corpus
  std::vector<MalcevAlgebra> corpus;
  corpus.push_back(make_malcev(make_sl2()));
  corpus.push_back(make_malcev(make_b2()));
  corpus.push_back(make_malcev(abelian(2)));
  corpus.push_back(make_malcev(contract(make_t7seed(), make_gamma()).result.alg));
  corpus.push_back(functor_F(triality_TL(direct_sum(make_sl2(), make_b2()))).malcev);
  for (const MalcevAlgebra& m : corpus) {
    GResult g = functor_G(m);
    FResult back = functor_F(g.triality);
    CHECK(back.malcev.alg.dim() == m.alg.dim());
    CHECK(back.malcev.alg.sc() == m.alg.sc());
  }
}

TEST_CASE("inder_relative realizes the radical transfer device") {
  // G_M(I) = Inder(M, I) + I is a solvable ideal of phi0(M) when I is the
  // radical; checked on the mixed host sl2 + b2
  FResult f = functor_F(triality_TL(direct_sum(make_sl2(), make_b2())));
  const MalcevAlgebra& M = f.malcev;
  Subspace rad = malcev_radical(M);
  REQUIRE(rad.dim() == 2);

  Phi0Result g = phi0(M);
  std::size_t d = g.inder_span.dim();
  std::size_t n = M.alg.dim();
  Subspace rel = inder_relative(M, rad);

  // embed Inder(M, I) + I into the graded algebra's coordinates
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    auto c = g.inder_span.coords(rel.basis_row(r));
    REQUIRE(c);
    Vec row = zero_vec(d + n);
    for (std::size_t k = 0; k < d; ++k) row[k] = (*c)[k];
    rows.push_back(row);
  }
  for (std::size_t r = 0; r < rad.dim(); ++r) {
    Vec row = zero_vec(d + n);
    for (std::size_t k = 0; k < n; ++k) row[d + k] = rad.basis_row(r)[k];
    rows.push_back(row);
  }
  Subspace gm = Subspace::span(d + n, rows);
  CHECK(is_ideal(g.graded.alg, gm));
  CHECK(is_solvable(g.graded.alg, gm));
}

// ---------------------------------------------------------------------------
// D4-heavy checks
// ---------------------------------------------------------------------------

TEST_CASE("psi and F on D4") {
  const TrialityAlgebra& d4 = d4_triality();
  PsiResult p = psi(d4);
  CHECK(p.m0_rows.rows() == 14);
  CHECK(p.m2_rows.rows() == 7);
  CHECK(check_graded_identities(p.graded).ok());

  MalcevAlgebra m7 = psi0(p.graded);
  CHECK(m7.alg.dim() == 7);
  CHECK_FALSE(check_jacobi(m7.alg).ok());
  CHECK(simplicity_certificate(m7.alg).ok());

  Phi0Result g = phi0(m7);
  CHECK(g.inder_span.dim() == 14);
  CHECK(g.graded.alg.dim() == 21);

  Report triv = triviality_check(d4);
  CHECK(triv.quantities.at("trivial") == "false");
}

TEST_CASE("automorphism transport: exp(ad e4) commutes with S3 and descends to F(D4)") {
  const TrialityAlgebra& d4 = d4_triality();
  std::size_t n = d4.alg.dim();

  // e4 is fixed by the S3 action, so exp(ad e4) is an exact rational
  // automorphism of D4 commuting with sigma and rho
  Matrix ad = left_mult(d4.alg, unit_vec(n, d4.alg.index_of("e4")));
  Matrix expm = Matrix::identity(n);
  Matrix pow = Matrix::identity(n);
  Scalar factorial(1);
  for (std::size_t k = 1; k <= n; ++k) {
    pow = pow * ad;
    if (pow.is_zero()) break;
    factorial *= Scalar(static_cast<long>(k));
    expm = expm + factorial.inverse() * pow;
  }
  REQUIRE(pow.is_zero());  // nilpotent, so the sum is finite and exact

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = product(d4.alg, unit_vec(n, i), unit_vec(n, j)) * expm;
      Vec rhs = product(d4.alg, unit_vec(n, i) * expm, unit_vec(n, j) * expm);
      REQUIRE(lhs == rhs);
    }
  CHECK(expm * d4.act.sigma == d4.act.sigma * expm);
  CHECK(expm * d4.act.rho == d4.act.rho * expm);

  // transport to the Malcev side: the H slice is preserved and the induced
  // map is an automorphism of F(D4)
  FResult f = functor_F(d4);
  std::size_t m2 = f.slice_rows.rows();
  Matrix induced(m2, m2);
  for (std::size_t i = 0; i < m2; ++i) {
    auto c = solve_in_rows(f.slice_rows, f.slice_rows.row(i) * expm);
    REQUIRE(c);
    induced.set_row(i, *c);
  }
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m2; ++j) {
      Vec lhs = product(f.malcev.alg, unit_vec(m2, i), unit_vec(m2, j)) * induced;
      Vec rhs = product(f.malcev.alg, unit_vec(m2, i) * induced,
                        unit_vec(m2, j) * induced);
      REQUIRE(lhs == rhs);
    }
}
