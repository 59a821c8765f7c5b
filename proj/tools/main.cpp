// Command-line front end: constructors for the built-in algebras, verification
// reports, isotypic decomposition, the functor chain, centres, roundtrips,
// radicals and the identity engine. Exit codes: 0 all requested checks pass,
// 1 a check failed, 2 bad input or usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trialg/centres.hpp"
#include "trialg/checks.hpp"
#include "trialg/constructions.hpp"
#include "trialg/delta.hpp"
#include "trialg/functors.hpp"
#include "trialg/serialize.hpp"
#include "trialg/structure.hpp"

using namespace trialg;

namespace {

struct CheckFailure {
  explicit CheckFailure(std::string what) : message(std::move(what)) {}
  std::string message;
};

AlgebraFile load_or_die(const std::string& path) { return load_algebra_file(path); }

TrialityAlgebra as_triality(const AlgebraFile& f) {
  if (!f.action) throw FileError("input file carries no S3 action matrices");
  return make_triality(f.alg, *f.action);
}

GradedAlgebra as_graded(const AlgebraFile& f) {
  if (!f.grading) throw FileError("input file carries no grading");
  return make_graded(f.alg, *f.grading);
}

std::vector<int> grade_set_of(const GradedAlgebra& g) {
  for (int gr : g.grade_set)
    if (gr == 1) return {0, 1};
  return {0, 2};
}

Subspace span_of_labels(const Algebra& A, const std::string& csv) {
  std::vector<Vec> rows;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    rows.push_back(unit_vec(A.dim(), A.index_of(item)));
  }
  return Subspace::span(A.dim(), rows);
}

void emit_report(const Report& rep, bool as_json) {
  if (as_json)
    std::cout << report_to_json_text(rep);
  else
    std::cout << rep.to_text();
}

int run_construct(const std::string& what, const std::string& input,
                  const std::string& sub_a, const std::string& sub_b,
                  const std::string& out, bool as_json) {
  AlgebraFile result;
  result.name = what;
  if (what == "d4") {
    D4Result r = make_d4();
    result.alg = r.alg;
    result.action = r.act;
    emit_report(r.construction_report, as_json);
    if (!r.construction_report.ok()) throw CheckFailure("d4 construction gates failed");
  } else if (what == "lambda") {
    LambdaAlgebra lam = make_lambda();
    result.alg = lam.graded.alg;
    result.grading = lam.graded.grades;
    result.action = lam.act;
  } else if (what == "gamma") {
    GradedAlgebra g = make_gamma();
    result.alg = g.alg;
    result.grading = g.grades;
  } else if (what == "osp") {
    GradedAlgebra g = make_osp();
    result.alg = g.alg;
    result.grading = g.grades;
  } else if (what == "t7") {
    GradedAlgebra g = make_t7seed();
    result.alg = g.alg;
    result.grading = g.grades;
  } else if (what == "sl2") {
    result.alg = make_sl2();
  } else if (what == "b2") {
    result.alg = make_b2();
  } else if (what == "tL") {
    Algebra L = input.empty() ? make_sl2() : load_or_die(input).alg;
    AlgebraWithAction tl = make_TL(L);
    result.alg = tl.alg;
    result.action = tl.act;
    if (!input.empty()) result.name = "tL(" + load_or_die(input).name + ")";
  } else if (what == "tAB") {
    Algebra L = input.empty() ? make_sl2() : load_or_die(input).alg;
    if (sub_a.empty() || sub_b.empty())
      throw FileError("construct tAB needs --sub-a and --sub-b label lists");
    CompatiblePair pair{span_of_labels(L, sub_a), span_of_labels(L, sub_b)};
    Report comp = check_compatible(L, pair);
    emit_report(comp, as_json);
    if (!comp.ok()) throw CheckFailure("the pair is not compatible");
    InvariantSubalgebra tab = make_TAB(L, pair);
    result.alg = tab.alg;
    result.action = tab.act;
  } else {
    throw FileError("unknown constructor '" + what + "'");
  }
  save_algebra_file(result, out);
  std::cout << "wrote " << out << " (dim " << result.alg.dim() << ")\n";
  return 0;
}

int run_verify(const std::string& path, bool lie, bool malcev, bool triality,
               bool graded, bool as_json) {
  AlgebraFile f = load_or_die(path);
  bool all_ok = true;
  if (lie) {
    Report a = check_anticommutative(f.alg);
    Report j = check_jacobi(f.alg);
    emit_report(a, as_json);
    emit_report(j, as_json);
    all_ok = all_ok && a.ok() && j.ok();
  }
  if (malcev) {
    Report m = check_malcev(f.alg);
    emit_report(m, as_json);
    all_ok = all_ok && m.ok();
  }
  if (triality) {
    if (!f.action) throw FileError("--triality needs action matrices in the file");
    Report act = verify_action(f.alg, *f.action);
    emit_report(act, as_json);
    all_ok = all_ok && act.ok();
    if (act.ok()) {
      TrialityResult t = is_triality(f.alg, *f.action);
      Report rep;
      rep.subject = "triality identity";
      CheckItem& item = rep.add("(x^s - x) + (x^s - x)^r + (x^s - x)^r^2 = 0");
      if (!t.holds) rep.fail(item, "violating basis vector found");
      emit_report(rep, as_json);
      all_ok = all_ok && t.holds;
    }
  }
  if (graded) {
    Report g = check_graded_identities(as_graded(f));
    emit_report(g, as_json);
    all_ok = all_ok && g.ok();
  }
  if (!lie && !malcev && !triality && !graded)
    std::cout << "loaded " << f.name << ": dim " << f.alg.dim() << "\n";
  if (!all_ok) throw CheckFailure("verification failed");
  return 0;
}

int run_decompose(const std::string& path, bool as_json) {
  TrialityAlgebra t = as_triality(load_or_die(path));
  Report rep;
  rep.subject = "isotypic decomposition";
  rep.set_quantity("fixed_dim", std::to_string(t.dec.fixed.dim()));
  rep.set_quantity("sign_dim", std::to_string(t.dec.sign.dim()));
  rep.set_quantity("two_dim_dim", std::to_string(t.dec.two_dim.dim()));
  rep.set_quantity("standard_pairs", std::to_string(t.dec.pairs.size()));
  emit_report(rep, as_json);
  return 0;
}

int run_functor(const std::string& which, const std::string& path,
                const std::string& out) {
  AlgebraFile f = load_or_die(path);
  AlgebraFile result;
  if (which == "psi") {
    PsiResult p = psi(as_triality(f));
    result = AlgebraFile{"psi(" + f.name + ")", p.graded.alg, p.graded.grades, {}};
  } else if (which == "psi0") {
    MalcevAlgebra m = psi0(as_graded(f));
    result = AlgebraFile{"psi0(" + f.name + ")", m.alg, {}, {}};
  } else if (which == "F") {
    FResult r = functor_F(as_triality(f));
    result = AlgebraFile{"F(" + f.name + ")", r.malcev.alg, {}, {}};
  } else if (which == "phi") {
    PhiResult r = phi(as_graded(f));
    result = AlgebraFile{"phi(" + f.name + ")", r.triality.alg, {}, r.triality.act};
  } else if (which == "phi0") {
    Phi0Result r = phi0(make_malcev(f.alg));
    result = AlgebraFile{"phi0(" + f.name + ")", r.graded.alg, r.graded.grades, {}};
  } else if (which == "G") {
    GResult r = functor_G(make_malcev(f.alg));
    result = AlgebraFile{"G(" + f.name + ")", r.triality.alg, {}, r.triality.act};
  } else {
    throw FileError("unknown functor '" + which + "'");
  }
  save_algebra_file(result, out);
  std::cout << "wrote " << out << " (dim " << result.alg.dim() << ")\n";
  return 0;
}

int run_centre(const std::string& which, const std::string& path, bool as_json) {
  AlgebraFile f = load_or_die(path);
  Report rep;
  if (which == "lie") {
    Subspace c = lie_centre(make_malcev(f.alg));
    rep.subject = "lie centre";
    rep.set_quantity("dim", std::to_string(c.dim()));
  } else if (which == "t") {
    TCentre tc = t_centre(as_triality(f));
    rep = tc.report;
  } else {
    throw FileError("unknown centre '" + which + "'");
  }
  emit_report(rep, as_json);
  if (!rep.ok()) throw CheckFailure("centre verification failed");
  return 0;
}

int run_roundtrip(const std::string& path, bool as_json) {
  RoundtripResult r = roundtrip_check(as_triality(load_or_die(path)));
  emit_report(r.report, as_json);
  if (!r.report.ok()) throw CheckFailure("roundtrip failed (input is not normal)");
  return 0;
}

int run_radical(const std::string& path, bool as_json) {
  AlgebraFile f = load_or_die(path);
  Report rep;
  rep.subject = "solvable radical";
  if (check_anticommutative(f.alg).ok() && check_jacobi(f.alg).ok()) {
    Subspace rad = solvable_radical_lie(f.alg);
    rep.set_quantity("kind", "lie");
    rep.set_quantity("dim", std::to_string(rad.dim()));
  } else if (check_malcev(f.alg).ok()) {
    Subspace rad = malcev_radical(make_malcev(f.alg));
    rep.set_quantity("kind", "malcev");
    rep.set_quantity("dim", std::to_string(rad.dim()));
  } else {
    throw FileError("input is neither Lie nor Malcev");
  }
  emit_report(rep, as_json);
  return 0;
}

int run_derive(const std::string& axioms_path, const std::string& lambda_path,
               const std::string& out) {
  AlgebraFile lf = load_or_die(lambda_path);
  GradedAlgebra lam = as_graded(lf);
  std::ifstream in(axioms_path);
  if (!in) throw FileError("cannot open '" + axioms_path + "'");
  std::vector<DeltaPoly> axioms = load_identity_lines(in, grade_set_of(lam));
  std::vector<DeltaPoly> derived = derive_variety(axioms, lam);
  std::ofstream os(out, std::ios::binary);
  if (!os) throw FileError("cannot open '" + out + "' for writing");
  os << "# derived identity set over " << lf.name << "\n";
  for (const DeltaPoly& g : derived) os << to_string(g) << "\n";
  std::cout << "wrote " << out << " (" << derived.size() << " identities)\n";
  return 0;
}

int run_eval(const std::string& id_path, const std::string& on_path, bool as_json) {
  AlgebraFile f = load_or_die(on_path);
  GradedAlgebra M = as_graded(f);
  std::ifstream in(id_path);
  if (!in) throw FileError("cannot open '" + id_path + "'");
  std::vector<DeltaPoly> ids = load_identity_lines(in, grade_set_of(M));
  bool all_ok = true;
  for (const DeltaPoly& g : ids) {
    Report r = eval_identity(g, M);
    emit_report(r, as_json);
    all_ok = all_ok && r.ok();
  }
  if (!all_ok) throw CheckFailure("an identity fails on the input");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for Lie algebras with triality and Malcev algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit reports as JSON");

  std::string what, input, sub_a, sub_b, out, path, id_path, on_path;
  bool lie = false, malcev = false, triality = false, graded = false;

  auto* construct = app.add_subcommand("construct", "build one of the built-in algebras");
  construct->add_option("what", what, "d4|lambda|gamma|osp|t7|tL|tAB|sl2|b2")->required();
  construct->add_option("input", input, "host algebra file for tL/tAB (default: sl2)");
  construct->add_option("--sub-a", sub_a, "comma-separated labels spanning A (tAB)");
  construct->add_option("--sub-b", sub_b, "comma-separated labels spanning B (tAB)");
  construct->add_option("-o,--output", out, "output file")->required();

  auto* verify = app.add_subcommand("verify", "run identity checks on a file");
  verify->add_option("file", path)->required();
  verify->add_flag("--lie", lie, "anticommutativity and Jacobi");
  verify->add_flag("--malcev", malcev, "the polarized Malcev identity");
  verify->add_flag("--triality", triality, "S3 action and the triality identity");
  verify->add_flag("--graded", graded, "the graded variety identities");

  auto* decomp = app.add_subcommand("decompose", "isotypic decomposition");
  decomp->add_option("file", path)->required();

  auto* functor = app.add_subcommand("functor", "apply psi|psi0|phi|phi0|F|G");
  functor->add_option("which", what, "psi|psi0|phi|phi0|F|G")->required();
  functor->add_option("file", path)->required();
  functor->add_option("-o,--output", out)->required();

  auto* centre = app.add_subcommand("centre", "lie or t centre");
  centre->add_option("which", what, "lie|t")->required();
  centre->add_option("file", path)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "verify G(F(L)) = L");
  roundtrip->add_option("file", path)->required();

  auto* radical = app.add_subcommand("radical", "solvable radical");
  radical->add_option("file", path)->required();

  auto* derive = app.add_subcommand("derive-identities",
                                    "derived identity set over a companion algebra");
  derive->add_option("--axioms", id_path, "identity file")->required();
  derive->add_option("--lambda", on_path, "graded companion algebra file")->required();
  derive->add_option("-o,--output", out)->required();

  auto* evalid = app.add_subcommand("eval-identity", "evaluate identities on a file");
  evalid->add_option("--id", id_path, "identity file")->required();
  evalid->add_option("--on", on_path, "graded algebra file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(what, input, sub_a, sub_b, out, as_json);
    if (verify->parsed()) return run_verify(path, lie, malcev, triality, graded, as_json);
    if (decomp->parsed()) return run_decompose(path, as_json);
    if (functor->parsed()) return run_functor(what, path, out);
    if (centre->parsed()) return run_centre(what, path, as_json);
    if (roundtrip->parsed()) return run_roundtrip(path, as_json);
    if (radical->parsed()) return run_radical(path, as_json);
    if (derive->parsed()) return run_derive(id_path, on_path, out);
    if (evalid->parsed()) return run_eval(id_path, on_path, as_json);
  } catch (const CheckFailure& f) {
    std::cerr << "FAILED: " << f.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
