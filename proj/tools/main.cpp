#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bnsat/antipodal.hpp"
#include "bnsat/dynamics.hpp"
#include "bnsat/encoder.hpp"
#include "bnsat/external_solver.hpp"
#include "bnsat/regulatory.hpp"
#include "bnsat/solver.hpp"
#include "bnsat/state.hpp"

namespace {

using namespace bnsat;

// solve mirrors the SAT-competition convention; 2 is reserved for hard
// errors so it cannot be confused with a verdict.
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitUnknown = 1;
constexpr int kExitError = 2;

void print_block_summary(const CnfFormula& formula) {
  std::cout << "variables " << formula.var_count() << "\n";
  for (const CnfFormula::BlockInfo& block : formula.blocks())
    std::cout << "block " << to_string(block.tag) << " "
              << (block.last - block.first) << " clauses\n";
  std::cout << "total " << formula.clause_count() << " clauses\n";
}

// The encoder uses n * 2^n variables for dimension n; that sequence is
// strictly increasing, so a variable count identifies n when it matches.
std::optional<int> infer_dimension(int var_count) {
  for (int n = 1; n <= kMaxDimension; ++n)
    if (static_cast<long long>(n) << n == var_count) return n;
  return std::nullopt;
}

void print_values(const Assignment& model) {
  std::string line = "v";
  for (int v = 1; v <= model.var_count(); ++v) {
    line += ' ';
    line += std::to_string(model.value(v) ? v : -v);
    if (line.size() > 72) {
      std::cout << line << "\n";
      line = "v";
    }
  }
  std::cout << line << " 0\n";
}

void print_decoded_map(const BooleanMap& f) {
  std::cout << "c decoded map, n = " << f.dimension() << "\n";
  for (Word w = 0; w < f.state_count(); ++w) {
    State x(w, f.dimension());
    std::cout << "c map " << x.to_string() << " " << f.apply(x).to_string()
              << "\n";
  }
}

struct EncodeConfig {
  std::string question;
  int n = 0;
  int k = 0;
  std::string output;
  bool emit_comments = false;
};

int cmd_encode(const EncodeConfig& config) {
  CnfFormula formula =
      config.question == "q1" ? build_q1(config.n, config.k) : build_q2(config.n);
  std::cout << "question " << config.question << " n " << config.n;
  if (config.question == "q1") std::cout << " k " << config.k;
  std::cout << "\n";
  print_block_summary(formula);
  if (!config.output.empty()) {
    write_dimacs_file(config.output, formula, config.emit_comments);
    std::cout << "wrote " << config.output << "\n";
  }
  return 0;
}

struct SolveConfig {
  std::string question;
  int n = 0;
  int k = 0;
  std::string cnf_path;
  std::string external;
  std::string proof;
  std::string model_out;
  std::uint64_t max_conflicts = 0;  // 0: unlimited
  double timeout = 0.0;
  std::uint32_t seed = 0;
};

// Semantic re-check of a decoded q1/q2 model; a failure here means the
// encoder, solver and decoder do not agree and must not be reported as SAT.
bool check_model_semantics(const BooleanMap& f, const std::string& question,
                           int k) {
  bool ok = true;
  auto check = [&](const char* label, bool pass) {
    std::cout << "c check " << label << " " << (pass ? "pass" : "FAIL") << "\n";
    ok = ok && pass;
  };
  check("no-local-negative-circuit", !has_local_negative_circuit(f));
  check("origin-unstable-in-coordinate-1",
        f.component(1, origin(f.dimension())));
  if (question == "q1") {
    int d = distance_to_nearest_fixed_point(f, origin(f.dimension()));
    check("no-fixed-point-within-bound", d == -1 || d > k);
  } else {
    check("no-fixed-points", fixed_points(f).empty());
  }
  return ok;
}

int cmd_solve(const SolveConfig& config) {
  CnfFormula formula(0);
  const bool inline_question = config.cnf_path.empty();
  if (inline_question) {
    formula =
        config.question == "q1" ? build_q1(config.n, config.k) : build_q2(config.n);
  } else {
    formula = parse_dimacs_file(config.cnf_path);
  }

  SolveResult result;
  if (!config.external.empty()) {
    result = inline_question
                 ? external_solve(formula, config.external, config.proof)
                 : external_solve_on_file(formula, config.cnf_path,
                                          config.external, config.proof);
  } else {
    SolveLimits limits;
    if (config.max_conflicts > 0) limits.max_conflicts = config.max_conflicts;
    limits.max_seconds = config.timeout;
    limits.seed = config.seed;
    result = solve(formula, limits);
    std::cout << "c conflicts " << result.stats.conflicts << " decisions "
              << result.stats.decisions << " propagations "
              << result.stats.propagations << " learned "
              << result.stats.learned << "\n";
  }

  switch (result.verdict) {
    case Verdict::unsat:
      std::cout << "s UNSATISFIABLE\n";
      return kExitUnsat;
    case Verdict::unknown:
      std::cout << "s UNKNOWN\n";
      return kExitUnknown;
    case Verdict::sat:
      break;
  }

  std::cout << "s SATISFIABLE\n";
  print_values(*result.model);

  std::optional<int> n = inline_question
                             ? std::optional<int>(config.n)
                             : infer_dimension(formula.var_count());
  if (n) {
    BooleanMap f = decode_model(*result.model, *n);
    print_decoded_map(f);
    if (!config.model_out.empty()) {
      write_map_file(config.model_out, f);
      std::cout << "c wrote map " << config.model_out << "\n";
    }
    if (inline_question && !check_model_semantics(f, config.question, config.k)) {
      std::cerr << "error: model failed semantic verification\n";
      return kExitError;
    }
  }
  return kExitSat;
}

struct VerifyConfig {
  std::string map_path;
};

int cmd_verify(const VerifyConfig& config) {
  BooleanMap f = read_map_file(config.map_path);
  const int n = f.dimension();
  std::cout << "map " << config.map_path << ": n " << n << ", "
            << f.state_count() << " states\n";

  std::vector<State> fixed = fixed_points(f);
  std::cout << "fixed points (" << fixed.size() << "):";
  for (const State& x : fixed) std::cout << " " << x.to_string();
  std::cout << "\n";

  std::vector<Attractor> atts = attractors(f);
  std::cout << "attractors (" << atts.size() << "):\n";
  for (const Attractor& attractor : atts) {
    std::cout << (attractor.kind == AttractorKind::fixed_point
                      ? "  fixed point:"
                      : "  cyclic:");
    for (const State& x : attractor.states) std::cout << " " << x.to_string();
    std::cout << "\n";
  }

  std::optional<NegativeCircuitWitness> witness = find_local_negative_circuit(f);
  if (witness)
    std::cout << "local negative circuit: " << witness->circuit.to_string()
              << " at " << witness->state.to_string() << "\n";
  else
    std::cout << "local negative circuit: none\n";

  State origin_state = origin(n);
  if (is_fixed_point(f, origin_state)) {
    std::cout << "origin: fixed point\n";
  } else {
    int d = distance_to_nearest_fixed_point(f, origin_state);
    if (d == -1)
      std::cout << "origin: no fixed point reachable\n";
    else
      std::cout << "origin: shortest walk to a fixed point has length " << d
                << "\n";
  }
  return 0;
}

struct AntipodalConfig {
  int n = 0;
  std::string output;
};

int cmd_antipodal(const AntipodalConfig& config) {
  BooleanMap f = construct_antipodal_map(config.n);
  if (!config.output.empty()) {
    write_map_file(config.output, f);
    std::cout << "wrote " << config.output << "\n";
  }
  if (config.n > 7) {
    std::cout << "constructed map for n = " << config.n
              << "; exhaustive circuit verification is only run for n <= 7\n";
    return 0;
  }
  AntipodalReport report = verify_antipodal(config.n);
  std::cout << to_string(report);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean network attractor / negative-circuit workbench"};
  app.require_subcommand(1);

  EncodeConfig encode_config;
  CLI::App* encode = app.add_subcommand(
      "encode", "Build a CNF instance and write it in DIMACS format");
  encode->add_option("--question", encode_config.question, "q1 or q2")
      ->required()
      ->check(CLI::IsMember({"q1", "q2"}));
  encode->add_option("--n", encode_config.n, "network dimension")
      ->required()
      ->check(CLI::Range(1, kMaxDimension));
  CLI::Option* encode_k =
      encode->add_option("--k", encode_config.k, "path length bound (q1 only)")
          ->check(CLI::Range(1, 1 << kMaxDimension));
  encode->add_option("-o,--output", encode_config.output, "DIMACS output path");
  encode->add_flag("--emit-comments", encode_config.emit_comments,
                   "annotate clause blocks with DIMACS comments");

  SolveConfig solve_config;
  CLI::App* solve = app.add_subcommand(
      "solve", "Decide a generated or on-disk CNF instance");
  CLI::Option* solve_question =
      solve->add_option("--question", solve_config.question, "q1 or q2")
          ->check(CLI::IsMember({"q1", "q2"}));
  CLI::Option* solve_n = solve->add_option("--n", solve_config.n,
                                           "network dimension")
                             ->check(CLI::Range(1, kMaxDimension));
  CLI::Option* solve_k =
      solve->add_option("--k", solve_config.k, "path length bound (q1 only)")
          ->check(CLI::Range(1, 1 << kMaxDimension));
  CLI::Option* solve_cnf =
      solve->add_option("--cnf", solve_config.cnf_path, "DIMACS file to solve")
          ->check(CLI::ExistingFile);
  solve_cnf->excludes(solve_question)->excludes(solve_n)->excludes(solve_k);
  solve_question->needs(solve_n);
  CLI::Option* solve_external =
      solve->add_option("--external", solve_config.external,
                        "external solver command; the CNF path is appended "
                        "(or substituted for {cnf})")
          ->envname("BNSAT_EXTERNAL_SOLVER");
  solve->add_option("--proof", solve_config.proof,
                    "proof output path handed to the external solver")
      ->needs(solve_external);
  CLI::Option* solve_conflicts =
      solve->add_option("--max-conflicts", solve_config.max_conflicts,
                        "internal solver conflict budget (unknown when hit)");
  CLI::Option* solve_timeout =
      solve->add_option("--timeout", solve_config.timeout,
                        "internal solver time budget in seconds");
  CLI::Option* solve_seed = solve->add_option(
      "--seed", solve_config.seed, "internal solver branching perturbation");
  solve_external->excludes(solve_conflicts)
      ->excludes(solve_timeout)
      ->excludes(solve_seed);
  solve->add_option("--model-out", solve_config.model_out,
                    "write the decoded map here when satisfiable");

  VerifyConfig verify_config;
  CLI::App* verify = app.add_subcommand(
      "verify", "Analyze a map file: fixed points, attractors, circuits");
  verify->add_option("--map", verify_config.map_path, "truth-table map file")
      ->required()
      ->check(CLI::ExistingFile);

  AntipodalConfig antipodal_config;
  CLI::App* antipodal = app.add_subcommand(
      "antipodal", "Construct and verify an antipodal-cycle map");
  antipodal->add_option("--n", antipodal_config.n, "dimension, at least 6")
      ->required()
      ->check(CLI::Range(1, kMaxDimension));
  antipodal->add_option("-o,--output", antipodal_config.output,
                        "map output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (app.got_subcommand(encode)) {
      if (encode_config.question == "q1" && encode_k->count() == 0)
        throw CLI::RequiredError("--k (required for q1)");
      if (encode_config.question == "q2" && encode_k->count() > 0)
        throw CLI::ValidationError("--k does not apply to q2");
      return cmd_encode(encode_config);
    }
    if (app.got_subcommand(solve)) {
      if (solve_config.cnf_path.empty()) {
        if (solve_question->count() == 0)
          throw CLI::RequiredError("--question or --cnf");
        if (solve_config.question == "q1" && solve_k->count() == 0)
          throw CLI::RequiredError("--k (required for q1)");
        if (solve_config.question == "q2" && solve_k->count() > 0)
          throw CLI::ValidationError("--k does not apply to q2");
      }
      return cmd_solve(solve_config);
    }
    if (app.got_subcommand(verify)) return cmd_verify(verify_config);
    if (app.got_subcommand(antipodal)) return cmd_antipodal(antipodal_config);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
