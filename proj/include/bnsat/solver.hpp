#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bnsat/cnf.hpp"
#include "bnsat/state.hpp"

namespace bnsat {

/// Total truth assignment over variables 1..var_count().
class Assignment {
 public:
  explicit Assignment(int var_count)
      : values_(static_cast<std::size_t>(var_count), false) {}

  int var_count() const { return static_cast<int>(values_.size()); }
  bool value(int var) const { return values_[var - 1]; }
  void set(int var, bool v) { values_[var - 1] = v; }
  /// Literal truth value under the assignment.
  bool satisfies(Lit lit) const {
    return lit > 0 ? values_[lit - 1] : !values_[-lit - 1];
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

/// True iff every clause contains a satisfied literal. Throws
/// std::invalid_argument when the assignment does not cover the formula.
bool evaluate(const CnfFormula& formula, const Assignment& assignment);

/// Assignment giving variable n*int(x)+i the value f_i(x); the satisfying
/// assignments of the encoder formulas are exactly these images.
Assignment assignment_from_map(const BooleanMap& f);

/// Inverse of assignment_from_map. Requires exactly n * 2^n variables.
BooleanMap decode_model(const Assignment& assignment, int n);

enum class Verdict { sat, unsat, unknown };

const char* to_string(Verdict verdict);

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t learned = 0;
};

struct SolveLimits {
  std::uint64_t max_conflicts = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = 0;  // 0: no time limit
  unsigned seed = 0;       // perturbs initial branching order only
};

struct SolveResult {
  Verdict verdict = Verdict::unknown;
  std::optional<Assignment> model;  // present iff verdict == sat
  SolveStats stats;
};

/// Complete CDCL search: watched-literal unit propagation, first-UIP clause
/// learning, activity-driven branching (ties to the lowest variable index,
/// phase false first) and Luby restarts. Any returned model has been checked
/// with evaluate(); exceeding a limit yields Verdict::unknown, never a wrong
/// verdict. Deterministic for a fixed formula, limits and seed.
SolveResult solve(const CnfFormula& formula, const SolveLimits& limits = {});

}  // namespace bnsat
