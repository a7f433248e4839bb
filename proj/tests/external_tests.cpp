#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "bnsat/encoder.hpp"
#include "bnsat/external_solver.hpp"
#include "test_util.hpp"

using namespace bnsat;
using namespace bnsat::testing;
namespace fs = std::filesystem;

namespace {

// Temporary directory of fake solver scripts, removed on destruction.
struct ScriptDir {
  fs::path dir;

  ScriptDir() {
    dir = fs::temp_directory_path() /
          ("bnsat-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~ScriptDir() { fs::remove_all(dir); }

  std::string script(const std::string& name, const std::string& body) {
    fs::path path = dir / name;
    {
      std::ofstream out(path);
      out << "#!/bin/sh\n" << body;
    }
    fs::permissions(path, fs::perms::owner_all | fs::perms::group_read |
                              fs::perms::others_read);
    return path.string();
  }
};

CnfFormula simple_sat() {
  CnfFormula f(3);
  f.add_clause({1, 2});
  f.add_clause({-1, 3});
  f.add_clause({-2});
  return f;
}

}  // namespace

TEST_CASE("external status lines are relayed") {
  ScriptDir scripts;
  CnfFormula f = simple_sat();

  std::string unsat = scripts.script("unsat.sh",
                                     "echo 'c fake solver'\n"
                                     "echo 's UNSATISFIABLE'\n"
                                     "exit 20\n");
  SolveResult r = external_solve(f, unsat);
  CHECK(r.verdict == Verdict::unsat);
  CHECK_FALSE(r.model.has_value());

  std::string unknown = scripts.script("unknown.sh",
                                       "echo 's UNKNOWN'\n"
                                       "exit 0\n");
  CHECK(external_solve(f, unknown).verdict == Verdict::unknown);

  // Satisfiable answer with a correct model: 1=1, 2=0, 3=1.
  std::string sat = scripts.script("sat.sh",
                                   "echo 's SATISFIABLE'\n"
                                   "echo 'v 1 -2'\n"
                                   "echo 'v 3 0'\n"
                                   "exit 10\n");
  r = external_solve(f, sat);
  REQUIRE(r.verdict == Verdict::sat);
  REQUIRE(r.model.has_value());
  CHECK(r.model->value(1));
  CHECK_FALSE(r.model->value(2));
  CHECK(r.model->value(3));
  CHECK(evaluate(f, *r.model));
}

TEST_CASE("unmentioned variables default to false") {
  ScriptDir scripts;
  CnfFormula f(4);
  f.add_clause({1, 2});
  f.add_clause({-3, 4});  // satisfied by 3 = false
  std::string sat = scripts.script("partial.sh",
                                   "echo 's SATISFIABLE'\n"
                                   "echo 'v 1 0'\n"
                                   "exit 10\n");
  SolveResult r = external_solve(f, sat);
  REQUIRE(r.verdict == Verdict::sat);
  CHECK(r.model->value(1));
  CHECK_FALSE(r.model->value(2));
  CHECK_FALSE(r.model->value(3));
  CHECK_FALSE(r.model->value(4));
}

TEST_CASE("untrustworthy output is rejected") {
  ScriptDir scripts;
  CnfFormula f = simple_sat();

  std::string wrong_model = scripts.script("wrong.sh",
                                           "echo 's SATISFIABLE'\n"
                                           "echo 'v 2 0'\n"
                                           "exit 10\n");
  CHECK_THROWS_AS(external_solve(f, wrong_model), ExternalSolverError);

  std::string garbage = scripts.script("garbage.sh",
                                       "echo 'hello world'\n"
                                       "exit 0\n");
  CHECK_THROWS_AS(external_solve(f, garbage), ExternalSolverError);

  std::string silent = scripts.script("silent.sh", "exit 0\n");
  CHECK_THROWS_AS(external_solve(f, silent), ExternalSolverError);

  std::string twice = scripts.script("twice.sh",
                                     "echo 's UNSATISFIABLE'\n"
                                     "echo 's UNSATISFIABLE'\n"
                                     "exit 20\n");
  CHECK_THROWS_AS(external_solve(f, twice), ExternalSolverError);

  std::string out_of_range = scripts.script("range.sh",
                                            "echo 's SATISFIABLE'\n"
                                            "echo 'v 1 9 0'\n"
                                            "exit 10\n");
  CHECK_THROWS_AS(external_solve(f, out_of_range), ExternalSolverError);

  std::string contradictory = scripts.script("flip.sh",
                                             "echo 's SATISFIABLE'\n"
                                             "echo 'v 1 -1 0'\n"
                                             "exit 10\n");
  CHECK_THROWS_AS(external_solve(f, contradictory), ExternalSolverError);

  std::string sat_no_values = scripts.script("novals.sh",
                                             "echo 's SATISFIABLE'\n"
                                             "exit 10\n");
  CHECK_THROWS_AS(external_solve(f, sat_no_values), ExternalSolverError);

  // Exit code contradicting the status line.
  std::string lying_exit = scripts.script("lying.sh",
                                          "echo 's UNSATISFIABLE'\n"
                                          "exit 10\n");
  CHECK_THROWS_AS(external_solve(f, lying_exit), ExternalSolverError);

  std::string missing = (scripts.dir / "does-not-exist.sh").string();
  CHECK_THROWS_AS(external_solve(f, missing), ExternalSolverError);
}

TEST_CASE("command placeholders and appended arguments") {
  ScriptDir scripts;
  CnfFormula f = simple_sat();

  // Reads the instance path from $1 and answers by its header.
  std::string reader = scripts.script("reader.sh",
                                      "if grep -q '^p cnf 3 3$' \"$1\"; then\n"
                                      "  echo 's UNSATISFIABLE'\n"
                                      "  exit 20\n"
                                      "fi\n"
                                      "echo 's UNKNOWN'\n");
  CHECK(external_solve(f, reader).verdict == Verdict::unsat);
  CHECK(external_solve(f, reader + " {cnf}").verdict == Verdict::unsat);

  fs::path cnf = scripts.dir / "instance.cnf";
  write_dimacs_file(cnf, f);
  CHECK(external_solve_on_file(f, cnf.string(), reader).verdict ==
        Verdict::unsat);
}

TEST_CASE("proof path reaches the subprocess") {
  ScriptDir scripts;
  CnfFormula f(1);
  f.add_clause({1});
  f.add_clause({-1});

  // Copies its second argument into the proof slot so we can observe it.
  std::string prover = scripts.script("prover.sh",
                                      "echo '0' > \"$2\"\n"
                                      "echo 's UNSATISFIABLE'\n"
                                      "exit 20\n");

  fs::path appended = scripts.dir / "appended.proof";
  CHECK(external_solve(f, prover, appended.string()).verdict == Verdict::unsat);
  CHECK(fs::exists(appended));

  fs::path placed = scripts.dir / "placed.proof";
  std::string with_placeholders = prover + " {cnf} {proof}";
  CHECK(external_solve(f, with_placeholders, placed.string()).verdict ==
        Verdict::unsat);
  CHECK(fs::exists(placed));
}

TEST_CASE("temporary instance files are cleaned up") {
  ScriptDir scripts;
  CnfFormula f = simple_sat();
  std::string keeper = scripts.script(
      "keeper.sh",
      "here=\"$(dirname \"$0\")\"\n"
      "cp \"$1\" \"$here/seen.cnf\"\n"
      "printf '%s' \"$1\" > \"$here/seen.path\"\n"
      "echo 's UNKNOWN'\n");
  CHECK(external_solve(f, keeper).verdict == Verdict::unknown);
  REQUIRE(fs::exists(scripts.dir / "seen.cnf"));
  // The solver saw our CNF, at a path that must be gone by now.
  CHECK(parse_dimacs_file(scripts.dir / "seen.cnf").same_clauses(f));
  std::ifstream path_file(scripts.dir / "seen.path");
  std::string seen_path;
  std::getline(path_file, seen_path);
  REQUIRE_FALSE(seen_path.empty());
  CHECK_FALSE(fs::exists(seen_path));
}

TEST_CASE("dogfooding against the real instances") {
  ScriptDir scripts;
  // A faithful oracle implemented with the script toolbox: answers SAT with
  // the all-true model for formulas with no negative literal, else UNKNOWN.
  std::string positive = scripts.script("positive.sh",
                                        "if grep -q -- '-' \"$1\"; then\n"
                                        "  echo 's UNKNOWN'\n"
                                        "  exit 0\n"
                                        "fi\n"
                                        "echo 's SATISFIABLE'\n"
                                        "seq 1 \"$(awk '/^p cnf/ {print $3}' \"$1\")\" |\n"
                                        "  tr '\\n' ' ' | sed 's/^/v /; s/$/0/'\n"
                                        "exit 10\n");
  CnfFormula all_positive(5);
  all_positive.add_clause({1, 2});
  all_positive.add_clause({3, 4, 5});
  SolveResult r = external_solve(all_positive, positive);
  REQUIRE(r.verdict == Verdict::sat);
  CHECK(evaluate(all_positive, *r.model));
  CHECK(external_solve(build_q1(2, 2), positive).verdict == Verdict::unknown);
}
