#include "bnsat/external_solver.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

namespace bnsat {

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

// Substitutes `placeholder` everywhere in `command`; returns whether at
// least one substitution happened.
bool substitute(std::string& command, const std::string& placeholder,
                const std::string& value) {
  bool found = false;
  std::size_t at = 0;
  while ((at = command.find(placeholder, at)) != std::string::npos) {
    command.replace(at, placeholder.size(), value);
    at += value.size();
    found = true;
  }
  return found;
}

struct ProcessOutput {
  std::string stdout_text;
  int exit_code;
};

ProcessOutput run_process(const std::string& command_line) {
  FILE* pipe = popen(command_line.c_str(), "r");
  if (!pipe)
    throw ExternalSolverError("failed to launch solver: " + command_line);
  std::string text;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    text.append(buffer, got);
  int status = pclose(pipe);
  if (status == -1)
    throw ExternalSolverError("failed to reap solver process: " + command_line);
  if (!WIFEXITED(status))
    throw ExternalSolverError("solver terminated abnormally: " + command_line);
  return {std::move(text), WEXITSTATUS(status)};
}

}  // namespace

SolveResult external_solve_on_file(const CnfFormula& formula,
                                   const std::string& cnf_path,
                                   const std::string& command,
                                   const std::string& proof_path) {
  std::string command_line = command;
  if (!substitute(command_line, "{cnf}", shell_quote(cnf_path)))
    command_line += " " + shell_quote(cnf_path);
  if (!proof_path.empty()) {
    if (!substitute(command_line, "{proof}", shell_quote(proof_path)))
      command_line += " " + shell_quote(proof_path);
  }

  ProcessOutput proc = run_process(command_line);

  std::optional<Verdict> verdict;
  std::vector<std::int8_t> parsed(formula.var_count() + 1, 0);
  bool saw_values = false;
  std::istringstream lines(proc.stdout_text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.size() < 2 || line[1] != ' ') continue;
    if (line[0] == 's') {
      if (verdict)
        throw ExternalSolverError("solver printed more than one status line");
      std::string status = line.substr(2);
      while (!status.empty() && (status.back() == '\r' || status.back() == ' '))
        status.pop_back();
      if (status == "SATISFIABLE")
        verdict = Verdict::sat;
      else if (status == "UNSATISFIABLE")
        verdict = Verdict::unsat;
      else if (status == "UNKNOWN")
        verdict = Verdict::unknown;
      else
        throw ExternalSolverError("unrecognized solver status: " + status);
    } else if (line[0] == 'v') {
      std::istringstream fields(line.substr(2));
      long lit;
      while (fields >> lit) {
        if (lit == 0) continue;
        long v = lit > 0 ? lit : -lit;
        if (v > formula.var_count())
          throw ExternalSolverError("solver model names variable " +
                                    std::to_string(v) + " of " +
                                    std::to_string(formula.var_count()));
        std::int8_t sign = lit > 0 ? 1 : -1;
        if (parsed[v] != 0 && parsed[v] != sign)
          throw ExternalSolverError("solver model assigns variable " +
                                    std::to_string(v) + " both ways");
        parsed[v] = sign;
        saw_values = true;
      }
      if (!fields.eof())
        throw ExternalSolverError("malformed value line: " + line);
    }
  }

  if (!verdict)
    throw ExternalSolverError("no status line in solver output (exit code " +
                              std::to_string(proc.exit_code) + ")");
  if (proc.exit_code == 10 && *verdict != Verdict::sat)
    throw ExternalSolverError("exit code 10 contradicts status line");
  if (proc.exit_code == 20 && *verdict != Verdict::unsat)
    throw ExternalSolverError("exit code 20 contradicts status line");

  SolveResult result;
  result.verdict = *verdict;
  if (*verdict == Verdict::sat) {
    if (!saw_values)
      throw ExternalSolverError("satisfiable verdict without a model");
    Assignment model(formula.var_count());
    for (int v = 1; v <= formula.var_count(); ++v)
      model.set(v, parsed[v] > 0);
    if (!evaluate(formula, model))
      throw ExternalSolverError("solver model does not satisfy the formula");
    result.model = std::move(model);
  }
  return result;
}

SolveResult external_solve(const CnfFormula& formula,
                           const std::string& command,
                           const std::string& proof_path) {
  namespace fs = std::filesystem;
  std::random_device rd;
  std::string name = "bnsat-" + std::to_string(::getpid()) + "-" +
                     std::to_string(rd()) + ".cnf";
  fs::path cnf_path = fs::temp_directory_path() / name;
  write_dimacs_file(cnf_path.string(), formula);
  try {
    SolveResult result =
        external_solve_on_file(formula, cnf_path.string(), command, proof_path);
    fs::remove(cnf_path);
    return result;
  } catch (...) {
    fs::remove(cnf_path);
    throw;
  }
}

}  // namespace bnsat
