#include "trialg/functors.hpp"

#include <stdexcept>

#include "trialg/checks.hpp"
#include "trialg/constructions.hpp"

namespace trialg {

namespace {

Matrix averaging_projector(const S3Action& act, bool with_sign) {
  auto elems = group_elements(act);
  std::size_t n = act.sigma.rows();
  Matrix sum(n, n);
  for (const auto& [g, sgn] : elems)
    sum = sum + (with_sign && sgn < 0 ? Scalar(-1) * g : g);
  return Scalar(1, 6) * sum;
}

std::vector<std::string> fresh_labels(const std::string& stem, std::size_t count,
                                      const std::vector<std::string>& taken) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string name = stem + std::to_string(i);
    auto used = [&](const std::string& s) {
      for (const auto& t : taken)
        if (t == s) return true;
      for (const auto& t : out)
        if (t == s) return true;
      return false;
    };
    while (used(name)) name += "'";
    out.push_back(name);
  }
  return out;
}

}  // namespace

TrialityAlgebra make_triality(Algebra alg, S3Action act) {
  Report action_report = verify_action(alg, act);
  if (!action_report.ok())
    throw std::invalid_argument("make_triality: S3 action gate failed:\n" +
                                action_report.to_text());
  if (!is_triality(alg, act).holds)
    throw std::invalid_argument("make_triality: the defining triality identity fails");
  IsotypicDecomposition dec = decompose(alg, act);
  return TrialityAlgebra{std::move(alg), std::move(act), std::move(dec)};
}

MalcevAlgebra make_malcev(Algebra alg) {
  Report rep = check_malcev(alg);
  if (!rep.ok())
    throw std::invalid_argument("make_malcev: the Malcev gate failed:\n" + rep.to_text());
  return MalcevAlgebra{std::move(alg)};
}

TrialityAlgebra restrict_triality(const TrialityAlgebra& L, const Subspace& S,
                                  Matrix* embedding) {
  SubAlgebra sub = restrict_to_subalgebra(L.alg, S);
  auto restrict_map = [&](const Matrix& g) {
    Matrix m(S.dim(), S.dim());
    for (std::size_t i = 0; i < S.dim(); ++i) {
      auto coords = S.coords(S.basis_row(i) * g);
      if (!coords)
        throw std::invalid_argument("restrict_triality: subspace is not S3-stable");
      m.set_row(i, *coords);
    }
    return m;
  };
  S3Action act{restrict_map(L.act.sigma), restrict_map(L.act.rho)};
  if (embedding) *embedding = sub.embedding;
  return make_triality(sub.alg, act);
}

TrialityAlgebra quotient_triality(const TrialityAlgebra& L, const Subspace& I,
                                  Matrix* projection) {
  if (I.apply(L.act.sigma) != I || I.apply(L.act.rho) != I)
    throw std::invalid_argument("quotient_triality: ideal is not S3-stable");
  QuotientAlgebra q = quotient(L.alg, I);
  S3Action act{q.section * L.act.sigma * q.projection,
               q.section * L.act.rho * q.projection};
  if (projection) *projection = q.projection;
  return make_triality(q.alg, act);
}

PsiResult psi(const TrialityAlgebra& L) {
  std::size_t n = L.alg.dim();
  Matrix e0 = averaging_projector(L.act, false);
  Matrix e1 = averaging_projector(L.act, true);
  Matrix e2 = Matrix::identity(n) - e0 - e1;

  Matrix m0_rows = L.dec.fixed.basis();
  Subspace H = h_slice(L.dec, L.act);
  Matrix m2_rows = H.basis();
  std::size_t m0 = m0_rows.rows(), m2 = m2_rows.rows();

  std::vector<std::string> labels = fresh_labels("a", m0, {});
  for (const auto& l : fresh_labels("x", m2, labels)) labels.push_back(l);
  AlgebraBuilder builder(labels);
  std::vector<int> grades(m0, 0);
  grades.insert(grades.end(), m2, 2);

  auto m0_coords = [&](const Vec& v) {
    auto c = L.dec.fixed.coords(v);
    if (!c) throw std::logic_error("psi: value escaped the fixed component");
    return *c;
  };
  auto m2_coords = [&](const Vec& v) {
    auto c = H.coords(v);
    if (!c) throw std::logic_error("psi: value escaped the sigma-fixed slice");
    return *c;
  };
  auto lift = [&](const Vec& c0, const Vec& c2) {
    Vec r = zero_vec(m0 + m2);
    for (std::size_t k = 0; k < c0.size(); ++k) r[k] = c0[k];
    for (std::size_t k = 0; k < c2.size(); ++k) r[m0 + k] = c2[k];
    return r;
  };

  for (std::size_t i = 0; i < m0; ++i)
    for (std::size_t j = 0; j < m0; ++j) {
      Vec p = product(L.alg, m0_rows.row(i), m0_rows.row(j));
      builder.set_product(i, j, lift(m0_coords(p), zero_vec(m2)));
    }
  for (std::size_t i = 0; i < m0; ++i)
    for (std::size_t j = 0; j < m2; ++j) {
      Vec p = product(L.alg, m0_rows.row(i), m2_rows.row(j));
      Vec c = m2_coords(p);
      builder.set_product(i, m0 + j, lift(zero_vec(m0), c));
      Vec q = product(L.alg, m2_rows.row(j), m0_rows.row(i));
      builder.set_product(m0 + j, i, lift(zero_vec(m0), m2_coords(q)));
    }
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m2; ++j) {
      Vec p = product(L.alg, m2_rows.row(i), m2_rows.row(j));
      Vec part0 = Scalar(3, 2) * (p * e0);
      Vec part2 = Scalar(-3) * (p * e2);
      builder.set_product(m0 + i, m0 + j, lift(m0_coords(part0), m2_coords(part2)));
    }

  PsiResult res{make_graded(builder.build(), grades), m0_rows, m2_rows};
  res.graded.grade_set = {0, 2};
  Report gate = check_graded_identities(res.graded);
  if (!gate.ok())
    throw std::logic_error("psi: output fails the graded identities:\n" + gate.to_text());
  return res;
}

MalcevAlgebra psi0(const GradedAlgebra& M) {
  Report gate = check_graded_identities(M);
  if (!gate.ok())
    throw std::invalid_argument("psi0: input fails the graded identities:\n" +
                                gate.to_text());
  auto idx2 = M.indices_of(2);
  std::vector<std::string> labels;
  for (std::size_t i : idx2) labels.push_back(M.alg.label(i));
  AlgebraBuilder builder(labels);
  for (std::size_t p = 0; p < idx2.size(); ++p)
    for (std::size_t q = 0; q < idx2.size(); ++q) {
      Vec c(idx2.size());
      for (std::size_t r = 0; r < idx2.size(); ++r)
        c[r] = M.alg.c(idx2[p], idx2[q], idx2[r]);
      builder.set_product(p, q, c);
    }
  return make_malcev(builder.build());
}

FResult functor_F(const TrialityAlgebra& L) {
  PsiResult p = psi(L);
  return FResult{psi0(p.graded), p.m2_rows};
}

Phi0Result phi0(const MalcevAlgebra& M) {
  std::size_t n = M.alg.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rows.push_back(flatten(inner_derivation(M.alg, unit_vec(n, i), unit_vec(n, j))));
  Subspace span = Subspace::span(n * n, rows);
  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < span.dim(); ++r)
    basis.push_back(unflatten(span.basis_row(r), n, n));
  std::size_t d = basis.size();

  std::vector<std::string> labels = fresh_labels("D", d, M.alg.labels());
  for (const auto& l : M.alg.labels()) labels.push_back(l);
  AlgebraBuilder builder(labels);
  std::vector<int> grades(d, 0);
  grades.insert(grades.end(), n, 2);

  auto inder_coords = [&](const Matrix& map) {
    auto c = span.coords(flatten(map));
    if (!c) throw std::logic_error("phi0: map escaped the inner-derivation span");
    return *c;
  };
  auto lift = [&](const Vec& c0, const Vec& c2) {
    Vec r = zero_vec(d + n);
    for (std::size_t k = 0; k < c0.size(); ++k) r[k] = c0[k];
    for (std::size_t k = 0; k < c2.size(); ++k) r[d + k] = c2[k];
    return r;
  };

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      // operator commutator; with right-action matrices mat(A o B) = M_B M_A
      Matrix comm = basis[b] * basis[a] - basis[a] * basis[b];
      builder.set_product(a, b, lift(inder_coords(comm), zero_vec(n)));
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      Vec img = unit_vec(n, j) * basis[a];  // the map applied to x_j
      builder.set_product(a, d + j, lift(zero_vec(d), img));
      builder.set_product(d + j, a, lift(zero_vec(d), Scalar(-1) * img));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix D = inner_derivation(M.alg, unit_vec(n, i), unit_vec(n, j));
      Vec c0 = Scalar(1, 6) * inder_coords(D);
      Vec c2 = zero_vec(n);
      for (const auto& [k, ck] : M.alg.basis_product(i, j)) c2[k] = ck;
      builder.set_product(d + i, d + j, lift(c0, c2));
    }

  Phi0Result res{make_graded(builder.build(), grades), std::move(basis), span};
  res.graded.grade_set = {0, 2};
  Report gate = check_graded_identities(res.graded);
  if (!gate.ok())
    throw std::logic_error("phi0: output fails the graded identities:\n" + gate.to_text());
  return res;
}

PhiResult phi(const GradedAlgebra& M) {
  Report gate = check_graded_identities(M);
  if (!gate.ok())
    throw std::invalid_argument("phi: input fails the graded identities:\n" +
                                gate.to_text());
  LambdaAlgebra lam = make_lambda();
  Contraction con = contract(M, lam.graded);
  std::size_t n = con.result.alg.dim();

  auto lift_action = [&](const Matrix& g_lambda) {
    Matrix m(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      auto [i, j] = con.factors[p];
      for (std::size_t l = 0; l < 3; ++l) {
        const Scalar& c = g_lambda.at(j, l);
        if (c.is_zero()) continue;
        m.at(p, con.index_of(i, l)) = c;
      }
    }
    return m;
  };
  S3Action act{lift_action(lam.act.sigma), lift_action(lam.act.rho)};
  if (!check_jacobi(con.result.alg).ok())
    throw std::logic_error("phi: contraction is not a Lie algebra");
  return PhiResult{make_triality(con.result.alg, act), con};
}

GResult functor_G(const MalcevAlgebra& M) {
  Phi0Result g = phi0(M);
  PhiResult p = phi(g.graded);
  return GResult{std::move(p.triality), std::move(g), std::move(p.contraction)};
}

Subspace N_of(const TrialityAlgebra& L) {
  std::size_t n = L.alg.dim();
  const Subspace& fixed = L.dec.fixed;
  const Subspace& two = L.dec.two_dim;
  if (fixed.dim() == 0) return Subspace::zero(n);
  Matrix sys(fixed.dim(), n * std::max<std::size_t>(two.dim(), 1));
  for (std::size_t k = 0; k < fixed.dim(); ++k)
    for (std::size_t l = 0; l < two.dim(); ++l) {
      Vec p = product(L.alg, fixed.basis_row(k), two.basis_row(l));
      for (std::size_t c = 0; c < n; ++c) sys.at(k, l * n + c) = p[c];
    }
  Subspace coords = left_kernel(sys);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < coords.dim(); ++r)
    rows.push_back(coords.basis_row(r) * fixed.basis());
  return Subspace::span(n, rows);
}

NormalityResult is_normal(const TrialityAlgebra& L) {
  NormalityResult res;
  res.annihilator = N_of(L);
  Subspace sq = product_span(L.alg, L.dec.two_dim, L.dec.two_dim);
  res.a22_fixed = subspace_intersect(sq, L.dec.fixed);
  res.normal = res.annihilator.dim() == 0 && res.a22_fixed == L.dec.fixed;
  return res;
}

KResult K_of(const TrialityAlgebra& L) {
  Subspace core = subalgebra_closure(L.alg, L.dec.two_dim);
  Matrix embedding;
  TrialityAlgebra sub = restrict_triality(L, core, &embedding);
  Subspace ideal_ambient = subspace_intersect(N_of(L), core);
  std::vector<Vec> ideal_rows;
  for (std::size_t r = 0; r < ideal_ambient.dim(); ++r) {
    auto c = core.coords(ideal_ambient.basis_row(r));
    if (!c) throw std::logic_error("K_of: ideal escaped the core");
    ideal_rows.push_back(*c);
  }
  Subspace ideal = Subspace::span(core.dim(), ideal_rows);
  return KResult{quotient_triality(sub, ideal), core};
}

RoundtripResult roundtrip_check(const TrialityAlgebra& L) {
  RoundtripResult out;
  Report& rep = out.report;
  rep.subject = "roundtrip G(F(L)) = L";

  PsiResult psires = psi(L);
  MalcevAlgebra mal = psi0(psires.graded);
  NormalityResult norm = is_normal(L);
  std::size_t m0 = psires.m0_rows.rows();
  std::size_t m2 = psires.m2_rows.rows();

  rep.set_quantity("normal", norm.normal ? "true" : "false");
  rep.set_quantity("annihilator_dim", std::to_string(norm.annihilator.dim()));
  rep.set_quantity("fixed_dim", std::to_string(m0));
  rep.set_quantity("a22_fixed_dim", std::to_string(norm.a22_fixed.dim()));

  GResult g = functor_G(mal);
  std::size_t gdim = g.triality.alg.dim();
  rep.set_quantity("dim_L", std::to_string(L.alg.dim()));
  rep.set_quantity("dim_GFL", std::to_string(gdim));

  CheckItem& main = rep.add("G(F(L)) = L (isomorphism iff normal)");
  if (!norm.normal) {
    main.pass = false;
    if (norm.annihilator.dim() != 0)
      main.witnesses.push_back("N(A) has dimension " +
                               std::to_string(norm.annihilator.dim()) +
                               "; the fixed part does not embed into Inder");
    if (norm.a22_fixed != L.dec.fixed)
      main.witnesses.push_back("(A_2^2)_0 has dimension " +
                               std::to_string(norm.a22_fixed.dim()) +
                               " < fixed dimension " + std::to_string(m0));
    if (gdim != L.alg.dim())
      main.witnesses.push_back("dim G(F(L)) = " + std::to_string(gdim) +
                               " differs from dim L = " + std::to_string(L.alg.dim()));
    return out;
  }

  // pi sends (x_i x_j)_0 to D(x_i, x_j)/6; rows over the pairs i < j
  std::size_t npairs = m2 * (m2 - 1) / 2;
  Matrix P(npairs, m0);
  Matrix Q(npairs, m2 * m2);
  {
    std::size_t r = 0;
    for (std::size_t i = 0; i < m2; ++i)
      for (std::size_t j = i + 1; j < m2; ++j, ++r) {
        for (std::size_t k = 0; k < m0; ++k)
          P.at(r, k) = psires.graded.alg.c(m0 + i, m0 + j, k);
        Vec d = flatten(Scalar(1, 6) * inner_derivation(mal.alg, unit_vec(m2, i),
                                                        unit_vec(m2, j)));
        Q.set_row(r, d);
      }
  }
  CheckItem& welldef = rep.add("pi respects all linear relations");
  Subspace rel = left_kernel(P);
  for (std::size_t r = 0; r < rel.dim(); ++r)
    if (!is_zero(rel.basis_row(r) * Q)) {
      rep.fail(welldef, "relation " + std::to_string(r) + " violated");
      throw std::logic_error("roundtrip_check: pi inconsistent although L is normal");
    }

  std::size_t inder_dim = g.graded.inder_span.dim();
  CheckItem& bij = rep.add("pi is bijective onto Inder");
  if (rank(P) != m0) {
    rep.fail(bij, "(M_2^2)_0 spans only rank " + std::to_string(rank(P)));
    throw std::logic_error("roundtrip_check: rank defect although L is normal");
  }
  Matrix T(m0, inder_dim);
  for (std::size_t k = 0; k < m0; ++k) {
    auto comb = solve_in_rows(P, unit_vec(m0, k));
    if (!comb) throw std::logic_error("roundtrip_check: failed to invert the pairing");
    auto coords = g.graded.inder_span.coords(*comb * Q);
    if (!coords) throw std::logic_error("roundtrip_check: image escaped Inder");
    T.set_row(k, *coords);
  }
  if (inder_dim != m0 || rank(T) != m0) {
    rep.fail(bij, "Inder dimension " + std::to_string(inder_dim) +
                      " vs fixed dimension " + std::to_string(m0));
    throw std::logic_error("roundtrip_check: pi is not bijective although L is normal");
  }

  // assemble the isomorphism G(F(L)) -> L
  Matrix theta(gdim, L.alg.dim());
  for (std::size_t p = 0; p < gdim; ++p) {
    auto [l, r] = g.contraction.factors[p];
    if (l < inder_dim) {
      auto c = solve(transpose(T), unit_vec(inder_dim, l));
      if (!c) throw std::logic_error("roundtrip_check: T inversion failed");
      theta.set_row(p, *c * psires.m0_rows);
    } else {
      Vec h = psires.m2_rows.row(l - inder_dim);
      Vec hr = h * L.act.rho;
      theta.set_row(p, r == 1 ? Scalar(-1) * hr : h + hr);
    }
  }
  out.iso = theta;

  CheckItem& iso = rep.add("isomorphism verified on basis pairs");
  if (rank(theta) != L.alg.dim()) {
    rep.fail(iso, "theta is singular");
    throw std::logic_error("roundtrip_check: theta singular although L is normal");
  }
  const Algebra& GA = g.triality.alg;
  for (std::size_t p = 0; p < gdim; ++p)
    for (std::size_t q = 0; q < gdim; ++q) {
      Vec lhs = zero_vec(L.alg.dim());
      for (const auto& [k, ck] : GA.basis_product(p, q))
        lhs = lhs + ck * theta.row(k);
      Vec rhs = product(L.alg, theta.row(p), theta.row(q));
      if (!is_zero(lhs - rhs)) {
        rep.fail(iso, "(" + GA.label(p) + ", " + GA.label(q) + ")");
        throw std::logic_error("roundtrip_check: morphism check failed on a normal input");
      }
    }
  CheckItem& equi = rep.add("isomorphism is S3-equivariant");
  if (!(g.triality.act.sigma * theta == theta * L.act.sigma) ||
      !(g.triality.act.rho * theta == theta * L.act.rho)) {
    rep.fail(equi, "action transport mismatch");
    throw std::logic_error("roundtrip_check: equivariance failed on a normal input");
  }
  return out;
}

ContractionRoundtrip contraction_roundtrip(const TrialityAlgebra& L) {
  PsiResult psires = psi(L);
  PhiResult ph = phi(psires.graded);
  std::size_t m0 = psires.m0_rows.rows();
  std::size_t gdim = ph.triality.alg.dim();

  Report rep;
  rep.subject = "contract(psi(L), Lambda) = L";
  Matrix theta(gdim, L.alg.dim());
  for (std::size_t p = 0; p < gdim; ++p) {
    auto [l, r] = ph.contraction.factors[p];
    if (l < m0) {
      theta.set_row(p, psires.m0_rows.row(l));
    } else {
      Vec h = psires.m2_rows.row(l - m0);
      Vec hr = h * L.act.rho;
      theta.set_row(p, r == 1 ? Scalar(-1) * hr : h + hr);
    }
  }

  CheckItem& bij = rep.add("map is bijective");
  if (gdim != L.alg.dim() || rank(theta) != L.alg.dim())
    rep.fail(bij, "dims " + std::to_string(gdim) + " vs " +
                      std::to_string(L.alg.dim()) + ", rank " +
                      std::to_string(rank(theta)));
  CheckItem& morph = rep.add("map is an algebra morphism on basis pairs");
  const Algebra& GA = ph.triality.alg;
  for (std::size_t p = 0; p < gdim && morph.pass; ++p)
    for (std::size_t q = 0; q < gdim; ++q) {
      Vec lhs = zero_vec(L.alg.dim());
      for (const auto& [k, ck] : GA.basis_product(p, q))
        lhs = lhs + ck * theta.row(k);
      if (!is_zero(lhs - product(L.alg, theta.row(p), theta.row(q)))) {
        rep.fail(morph, "(" + GA.label(p) + ", " + GA.label(q) + ")");
        break;
      }
    }
  CheckItem& equi = rep.add("map is S3-equivariant");
  if (!(ph.triality.act.sigma * theta == theta * L.act.sigma) ||
      !(ph.triality.act.rho * theta == theta * L.act.rho))
    rep.fail(equi, "action transport mismatch");
  return ContractionRoundtrip{std::move(rep), std::move(ph.triality), std::move(theta)};
}

Subspace inder_relative(const MalcevAlgebra& M, const Subspace& I) {
  if (!is_ideal(M.alg, I))
    throw std::invalid_argument("inder_relative: subspace is not an ideal");
  std::size_t n = M.alg.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < I.dim(); ++r)
      rows.push_back(flatten(inner_derivation(M.alg, unit_vec(n, i), I.basis_row(r))));
  return Subspace::span(n * n, rows);
}

Report triviality_check(const TrialityAlgebra& P) {
  Report rep;
  rep.subject = "triviality";
  PsiResult m = psi(P);
  MalcevAlgebra f = psi0(m.graded);
  bool malcev_is_lie = check_jacobi(f.alg).ok();
  bool graded_is_lie =
      check_jacobi(m.graded.alg).ok() && check_anticommutative(m.graded.alg).ok();
  CheckItem& agree = rep.add("Jacobi on F(P) and on psi(P) agree");
  if (malcev_is_lie != graded_is_lie) {
    rep.fail(agree, "the two equivalent criteria disagree");
    throw std::logic_error("triviality_check: equivalent criteria disagree");
  }
  rep.set_quantity("trivial", malcev_is_lie ? "true" : "false");
  rep.set_quantity("malcev_dim", std::to_string(f.alg.dim()));
  return rep;
}

Subspace malcev_radical(const MalcevAlgebra& M) {
  GResult g = functor_G(M);
  Subspace rad = solvable_radical_lie(g.triality.alg);
  std::size_t n = M.alg.dim();
  std::size_t inder_dim = g.graded.inder_span.dim();
  std::size_t gdim = g.triality.alg.dim();
  // canonical slice x -> x (x) (v + w)
  Matrix slice(n, gdim);
  for (std::size_t i = 0; i < n; ++i) {
    slice.at(i, g.contraction.index_of(inder_dim + i, 1)) = Scalar(1);
    slice.at(i, g.contraction.index_of(inder_dim + i, 2)) = Scalar(1);
  }
  Matrix pm = complement_projection(rad);
  Subspace coords = left_kernel(slice * pm);
  if (!is_solvable(M.alg, coords))
    throw std::logic_error("malcev_radical: slice failed the direct solvability check");
  return coords;
}

}  // namespace trialg
