// Exercises the CLI end to end: constructs the golden corpus into a scratch
// directory, byte-compares it against the committed corpus, pushes files
// through the functor/verify/centre/roundtrip subcommands and checks the
// documented exit codes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
std::string g_corpus;
std::string g_tmp;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[pass] " << what << "\n";
  } else {
    std::cout << "[FAIL] " << what << "\n";
    ++g_failures;
  }
}

int run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void expect_same_file(const std::string& generated, const std::string& golden) {
  std::string a = slurp(generated), b = slurp(golden);
  expect(!a.empty() && a == b, "regenerated file matches " + golden);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: test_cli <trialg-binary> <corpus-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_corpus = argv[2];
  g_tmp = "cli_scratch";
  if (std::system(("rm -rf " + g_tmp + " && mkdir -p " + g_tmp).c_str()) != 0) {
    std::cerr << "cannot prepare scratch directory\n";
    return 2;
  }

  // corpus regeneration is byte-identical
  expect(run("construct d4 -o " + g_tmp + "/d4.json") == 0, "construct d4");
  expect_same_file(g_tmp + "/d4.json", g_corpus + "/d4.json");
  expect(run("construct lambda -o " + g_tmp + "/lambda.json") == 0, "construct lambda");
  expect_same_file(g_tmp + "/lambda.json", g_corpus + "/lambda.json");
  expect(run("construct gamma -o " + g_tmp + "/gamma.json") == 0, "construct gamma");
  expect_same_file(g_tmp + "/gamma.json", g_corpus + "/gamma.json");
  expect(run("construct osp -o " + g_tmp + "/osp.json") == 0, "construct osp");
  expect_same_file(g_tmp + "/osp.json", g_corpus + "/osp.json");
  expect(run("construct t7 -o " + g_tmp + "/t7.json") == 0, "construct t7");
  expect_same_file(g_tmp + "/t7.json", g_corpus + "/t7.json");
  expect(run("construct tL -o " + g_tmp + "/t_sl2.json") == 0, "construct tL");
  expect_same_file(g_tmp + "/t_sl2.json", g_corpus + "/t_sl2.json");
  expect(run("functor F " + g_tmp + "/d4.json -o " + g_tmp + "/m7.json") == 0,
         "functor F d4");
  expect_same_file(g_tmp + "/m7.json", g_corpus + "/m7.json");

  // the acceptance-style verification chain
  expect(run("verify " + g_tmp + "/d4.json --lie --triality") == 0,
         "verify d4 --lie --triality exits 0");
  expect(run("verify " + g_tmp + "/m7.json --malcev") == 0,
         "verify m7 --malcev exits 0");
  expect(run("verify " + g_tmp + "/m7.json --lie") == 1,
         "verify m7 --lie exits 1 (not a Lie algebra)");
  expect(run("decompose " + g_tmp + "/d4.json") == 0, "decompose d4");
  expect(run("roundtrip " + g_tmp + "/d4.json") == 0, "roundtrip d4");
  expect(run("roundtrip " + g_tmp + "/t_sl2.json") == 0, "roundtrip t_sl2");
  expect(run("centre lie " + g_tmp + "/m7.json") == 0, "centre lie m7");
  expect(run("centre t " + g_tmp + "/d4.json") == 0, "centre t d4");
  expect(run("radical " + g_tmp + "/t_sl2.json") == 0, "radical t_sl2 (lie path)");
  expect(run("radical " + g_tmp + "/m7.json") == 0, "radical m7 (malcev path)");

  // functor files survive further processing
  expect(run("functor psi " + g_tmp + "/d4.json -o " + g_tmp + "/psi_d4.json") == 0,
         "functor psi d4");
  expect(run("verify " + g_tmp + "/psi_d4.json --graded") == 0,
         "verify psi(d4) --graded");
  expect(run("functor G " + g_tmp + "/m7.json -o " + g_tmp + "/g_m7.json") == 0,
         "functor G m7");
  expect(run("verify " + g_tmp + "/g_m7.json --lie --triality") == 0,
         "verify G(m7) --lie --triality");

  // identity engine via files
  expect(run("derive-identities --axioms " + g_corpus +
             "/identities/lie_axioms.txt --lambda " + g_tmp +
             "/lambda.json -o " + g_tmp + "/derived.txt") == 0,
         "derive-identities");
  expect(run("eval-identity --id " + g_tmp + "/derived.txt --on " + g_tmp +
             "/psi_d4.json") == 0,
         "derived identities hold on psi(d4)");
  expect(run("eval-identity --id " + g_corpus + "/identities/t_variety.txt --on " +
             g_tmp + "/psi_d4.json") == 0,
         "hand-coded variety identities hold on psi(d4)");

  // a sign mutation is caught with exit 1
  {
    std::string text = slurp(g_tmp + "/d4.json");
    auto pos = text.find("\"2\"");
    if (pos != std::string::npos) text.replace(pos, 3, "\"-2\"");
    std::ofstream out(g_tmp + "/mutated.json", std::ios::binary);
    out << text;
  }
  expect(run("verify " + g_tmp + "/mutated.json --lie") == 1,
         "verify mutated.json --lie exits 1");

  // bad files exit 2
  expect(run("verify /nonexistent.json --lie") == 2, "missing file exits 2");
  {
    std::ofstream out(g_tmp + "/broken.json");
    out << "{ not json";
  }
  expect(run("verify " + g_tmp + "/broken.json --lie") == 2, "broken file exits 2");

  if (g_failures) {
    std::cout << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
