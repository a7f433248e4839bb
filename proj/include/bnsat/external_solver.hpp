#pragma once

#include <stdexcept>
#include <string>

#include "bnsat/solver.hpp"

namespace bnsat {

// Raised when the subprocess cannot be run or its output cannot be trusted:
// launch failure, missing or malformed status line, out-of-range literals,
// or a reported model that does not satisfy the formula.
struct ExternalSolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs an external SAT solver on an existing DIMACS file and interprets the
// standard competition output: one "s SATISFIABLE" / "s UNSATISFIABLE" /
// "s UNKNOWN" status line and, for satisfiable instances, "v " value lines
// terminated by 0. Exit codes 10 and 20 are cross-checked against the status
// line. Any reported model is checked against `formula` with evaluate();
// variables the solver leaves unmentioned default to false.
//
// The command line is built by substituting "{cnf}" (and "{proof}" when a
// proof path is given) in `command`; absent placeholders, the paths are
// appended as extra arguments in that order. The proof file itself is
// whatever the solver writes; it is never read back.
SolveResult external_solve_on_file(const CnfFormula& formula,
                                   const std::string& cnf_path,
                                   const std::string& command,
                                   const std::string& proof_path = "");

// Convenience wrapper: writes `formula` to a temporary DIMACS file, solves,
// and removes the file afterwards.
SolveResult external_solve(const CnfFormula& formula,
                           const std::string& command,
                           const std::string& proof_path = "");

}  // namespace bnsat
