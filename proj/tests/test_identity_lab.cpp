#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "trialg/checks.hpp"
#include "trialg/constructions.hpp"
#include "trialg/delta.hpp"
#include "trialg/functors.hpp"

using namespace trialg;

namespace {

const std::vector<int> kDelta{0, 2};

const GradedAlgebra& psi_d4() {
  static GradedAlgebra cached = [] {
    D4Result r = make_d4();
    return psi(make_triality(r.alg, r.act)).graded;
  }();
  return cached;
}

const char* kF4 =
    "6*p0(x2*y2)*z2 - p2(p2(x2*y2)*z2) - p2(p2(z2*y2)*x2) - p2(p2(x2*z2)*y2)";

}  // namespace

TEST_CASE("parsing the documented grammar") {
  DeltaPoly p = parse_delta("p2(x2*y2)", kDelta);
  CHECK(p.root().kind == DeltaPoly::Kind::Proj);
  CHECK(p.root().proj_grade == 2);
  const auto& inner = *p.root().kids[0];
  CHECK(inner.kind == DeltaPoly::Kind::Prod);
  CHECK(inner.kids[0]->var_name == "x");
  CHECK(inner.kids[0]->var_grade == 2);

  DeltaPoly f4 = parse_delta(kF4, kDelta);
  CHECK(f4.root().kind == DeltaPoly::Kind::Sum);
  CHECK(f4.root().kids.size() == 4);
  auto vars = poly_variables(f4);
  CHECK(vars.size() == 3);

  CHECK_THROWS_AS(parse_delta("p3(x2)", kDelta), DeltaParseError);
  CHECK_THROWS_AS(parse_delta("x7", kDelta), DeltaParseError);
  CHECK_THROWS_AS(parse_delta("x2*", kDelta), DeltaParseError);
  CHECK_THROWS_AS(parse_delta("x2 + x0", kDelta), DeltaParseError);  // two grades
}

TEST_CASE("printer round-trips through the parser") {
  for (const char* src :
       {"p2(x2*y2)", kF4, "x0*y0 + y0*x0", "-x2 + 2/3*y2", "(x2 + y2)*z2",
        "x2*(y2*z2)", "1/6*p0(x2*y2)"}) {
    DeltaPoly p = parse_delta(src, kDelta);
    DeltaPoly q = parse_delta(to_string(p), kDelta);
    CHECK(p == q);
  }
}

TEST_CASE("eval: the graded identities hold on psi(D4) and mutations fail") {
  const GradedAlgebra& M = psi_d4();

  // (f2) with polarization
  CHECK(eval_identity(parse_delta("x2*x2", kDelta), M).ok());
  CHECK(eval_identity(parse_delta("x0*x0", kDelta), M).ok());
  CHECK(eval_identity(parse_delta("x0*y2 + y2*x0", kDelta), M).ok());

  // (f4) exactly, and with the 6 replaced by 5
  CHECK(eval_identity(parse_delta(kF4, kDelta), M).ok());
  std::string wrong = kF4;
  wrong[0] = '5';
  Report bad = eval_identity(parse_delta(wrong, kDelta), M);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.checks[0].witnesses.empty());

  // (f5)
  CHECK(eval_identity(
            parse_delta("p0(p2(x2*y2)*z2) + p0(p2(z2*x2)*y2) + p0(p2(y2*z2)*x2)",
                        kDelta),
            M)
            .ok());
}

TEST_CASE("expand: anticommutativity lands on the single carrier a") {
  LambdaAlgebra lam = make_lambda();
  DeltaPoly anti = parse_delta("x0*y0 + y0*x0", kDelta);
  std::map<std::string, std::size_t> T{{"x", 0}, {"y", 0}};  // both to a
  std::vector<DeltaPoly> comps = expand(anti, lam.graded, T);
  REQUIRE(comps.size() == 1);
  CHECK(to_string(comps[0]) == "x0*y0 + y0*x0");
}

TEST_CASE("expand rejects grade-mismatched assignments") {
  LambdaAlgebra lam = make_lambda();
  DeltaPoly anti = parse_delta("x0*y0 + y0*x0", kDelta);
  std::map<std::string, std::size_t> T{{"x", 1}, {"y", 0}};  // x0 -> v (grade 2)
  CHECK_THROWS_AS(expand(anti, lam.graded, T), std::invalid_argument);
}

TEST_CASE("expand of mixed-grade Jacobi produces identities valid on psi(D4)") {
  LambdaAlgebra lam = make_lambda();
  // J(x0, y2, z2) with carriers (a, v, w)
  DeltaPoly j = parse_delta("(x0*y2)*z2 + (y2*z2)*x0 + (z2*x0)*y2", kDelta);
  std::map<std::string, std::size_t> T{{"x", 0}, {"y", 1}, {"z", 2}};
  std::vector<DeltaPoly> comps = expand(j, lam.graded, T);
  CHECK_FALSE(comps.empty());
  for (const DeltaPoly& g : comps) CHECK(eval_identity(g, psi_d4()).ok());
}

TEST_CASE("expand is linear in f") {
  LambdaAlgebra lam = make_lambda();
  DeltaPoly f = parse_delta("p2(x2*y2)*z2", kDelta);
  DeltaPoly g = parse_delta("p0(x2*y2)*z2", kDelta);
  DeltaPoly fg = DeltaPoly::sum({f, g});
  std::map<std::string, std::size_t> T{{"x", 1}, {"y", 1}, {"z", 2}};

  // carrier-by-carrier, the components of f+g are the sums of the components
  std::map<std::size_t, std::vector<DeltaPoly>> parts;
  for (auto& [carrier, p] : expand_with_carriers(f, lam.graded, T))
    parts[carrier].push_back(p);
  for (auto& [carrier, p] : expand_with_carriers(g, lam.graded, T))
    parts[carrier].push_back(p);
  auto combined = expand_with_carriers(fg, lam.graded, T);
  CHECK_FALSE(combined.empty());
  for (auto& [carrier, p] : combined) {
    REQUIRE(parts.count(carrier));
    CHECK(canonical_key(p) == canonical_key(DeltaPoly::sum(parts[carrier])));
  }
}

TEST_CASE("derive_variety from the Lie axioms over Lambda") {
  LambdaAlgebra lam = make_lambda();
  std::vector<DeltaPoly> axioms = lie_axioms(kDelta);
  std::vector<DeltaPoly> derived = derive_variety(axioms, lam.graded);
  CHECK_FALSE(derived.empty());

  // every derived identity holds on psi(D4)
  for (const DeltaPoly& g : derived) {
    Report r = eval_identity(g, psi_d4());
    if (!r.ok()) {
      CAPTURE(to_string(g));
      CHECK(r.ok());
    }
  }

  // and on phi0 of the 7-dimensional simple Malcev algebra
  Contraction c = contract(make_t7seed(), make_gamma());
  Phi0Result p = phi0(make_malcev(c.result.alg));
  for (const DeltaPoly& g : derived) {
    Report r = eval_identity(g, p.graded);
    if (!r.ok()) {
      CAPTURE(to_string(g));
      CHECK(r.ok());
    }
  }

  // the empty axiom set derives nothing
  CHECK(derive_variety({}, lam.graded).empty());
}

TEST_CASE("derived set rejects a sign mutation exactly like the hand-coded set") {
  LambdaAlgebra lam = make_lambda();
  std::vector<DeltaPoly> derived = derive_variety(lie_axioms(kDelta), lam.graded);

  const GradedAlgebra& M = psi_d4();
  // flip one nonzero structure constant
  testutil::Rng rng(2024);
  AlgebraBuilder b(M.alg.labels());
  for (std::size_t i = 0; i < M.alg.dim(); ++i)
    for (std::size_t j = 0; j < M.alg.dim(); ++j)
      for (const auto& [k, c] : M.alg.basis_product(i, j)) b.set(i, j, k, c);
  std::size_t i0, j0;
  for (;;) {
    i0 = rng.index(M.alg.dim());
    j0 = rng.index(M.alg.dim());
    if (!M.alg.basis_product(i0, j0).empty()) break;
  }
  auto [k0, c0] = M.alg.basis_product(i0, j0).front();
  b.set(i0, j0, k0, Scalar(-1) * c0);
  GradedAlgebra mutated = make_graded(b.build(), M.grades);
  mutated.grade_set = {0, 2};

  bool derived_rejects = false;
  for (const DeltaPoly& g : derived)
    if (!eval_identity(g, mutated).ok()) derived_rejects = true;
  CHECK(derived_rejects);
  CHECK_FALSE(check_graded_identities(mutated).ok());
}

TEST_CASE("identity files: comments, blanks, and parse errors") {
  std::istringstream in(
      "# the square-zero identity\n"
      "x2*x2\n"
      "\n"
      "x0*y2 + y2*x0  # mixed polarization\n");
  std::vector<DeltaPoly> ids = load_identity_lines(in, kDelta);
  REQUIRE(ids.size() == 2);
  CHECK(to_string(ids[0]) == "x2*x2");

  std::istringstream bad("p9(x2)\n");
  CHECK_THROWS_AS(load_identity_lines(bad, kDelta), DeltaParseError);
}

TEST_CASE("variety membership agrees with the contraction being Lie") {
  // both directions on corpus members and a mutation
  LambdaAlgebra lam = make_lambda();
  auto contraction_is_lie = [&](const GradedAlgebra& M) {
    Contraction c = contract(M, lam.graded);
    return check_jacobi(c.result.alg).ok() &&
           check_anticommutative(c.result.alg).ok();
  };

  const GradedAlgebra& good = psi_d4();
  CHECK(check_graded_identities(good).ok());
  CHECK(contraction_is_lie(good));

  AlgebraBuilder b(good.alg.labels());
  for (std::size_t i = 0; i < good.alg.dim(); ++i)
    for (std::size_t j = 0; j < good.alg.dim(); ++j)
      for (const auto& [k, c] : good.alg.basis_product(i, j)) b.set(i, j, k, c);
  // flip the first nonzero product of a grade-2 basis pair
  std::size_t i0 = 0, j0 = 0;
  for (std::size_t i = 0; i < good.alg.dim() && !i0; ++i)
    for (std::size_t j = 0; j < good.alg.dim() && !i0; ++j)
      if (good.grades[i] == 2 && good.grades[j] == 2 &&
          !good.alg.basis_product(i, j).empty()) {
        i0 = i;
        j0 = j;
      }
  REQUIRE(i0 != 0);
  auto [k0, c0] = good.alg.basis_product(i0, j0).front();
  b.set(i0, j0, k0, Scalar(-1) * c0);
  GradedAlgebra mutated = make_graded(b.build(), good.grades);
  mutated.grade_set = {0, 2};
  CHECK_FALSE(check_graded_identities(mutated).ok());
  CHECK_FALSE(contraction_is_lie(mutated));
}

TEST_CASE("canonical keys identify renamings and scalings") {
  DeltaPoly a = parse_delta("x2*y2 + y2*x2", kDelta);
  DeltaPoly b = parse_delta("3*u2*v2 + 3*v2*u2", kDelta);
  CHECK(canonical_key(a) == canonical_key(b));
  DeltaPoly c = parse_delta("x2*y2 - y2*x2", kDelta);
  CHECK(canonical_key(a) != canonical_key(c));
  // a cancelling sum has the empty key
  DeltaPoly z = parse_delta("x2*y2 - x2*y2", kDelta);
  CHECK(canonical_key(z).empty());
}
