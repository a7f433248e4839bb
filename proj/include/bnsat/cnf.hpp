#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bnsat/state.hpp"

namespace bnsat {

/// DIMACS-style literal: positive for the variable, negative for its
/// negation. Variable ids start at 1.
using Lit = std::int32_t;

inline Lit var_of(Lit lit) { return lit < 0 ? -lit : lit; }

/// Provenance of a clause block inside a generated formula.
enum class ClauseBlock { condition, fixed_points, circuits, unit };

const char* to_string(ClauseBlock block);

/// CNF over variables 1..var_count(). Clauses are stored in a flat literal
/// arena in insertion order; generated formulas never contain duplicate
/// literals or tautological clauses, and add_clause enforces that.
class CnfFormula {
 public:
  explicit CnfFormula(int var_count);

  int var_count() const { return var_count_; }
  std::size_t clause_count() const { return offsets_.size() - 1; }
  std::size_t literal_count() const { return literals_.size(); }

  std::span<const Lit> clause(std::size_t index) const;
  void add_clause(std::span<const Lit> literals);
  void add_clause(std::initializer_list<Lit> literals);

  /// Marks the start of a provenance block; the block ends where the next
  /// one begins (or at the end of the formula).
  void begin_block(ClauseBlock tag);

  struct BlockInfo {
    ClauseBlock tag;
    std::size_t first;  // clause index range [first, last)
    std::size_t last;
  };
  std::vector<BlockInfo> blocks() const;
  /// Clause count of the first block with the given tag; 0 if none.
  std::size_t block_size(ClauseBlock tag) const;

  /// Equality of (var_count, clause list); block provenance is not compared,
  /// so a parsed file compares equal to the formula that produced it.
  bool same_clauses(const CnfFormula& other) const {
    return var_count_ == other.var_count_ && offsets_ == other.offsets_ &&
           literals_ == other.literals_;
  }

 private:
  int var_count_;
  std::vector<Lit> literals_;
  std::vector<std::size_t> offsets_;  // clause_count()+1 entries
  std::vector<std::pair<ClauseBlock, std::size_t>> block_starts_;
};

// DIMACS CNF: header "p cnf <vars> <clauses>", one clause per line, literals
// separated by single spaces with a terminating 0. write_dimacs output is
// byte-identical across runs; with comments enabled, one "c block ..." line
// precedes each block.
void write_dimacs(std::ostream& out, const CnfFormula& formula,
                  bool emit_comments = false);
void write_dimacs_file(const std::filesystem::path& path,
                       const CnfFormula& formula, bool emit_comments = false);

/// Accepts comment lines anywhere and clauses spanning multiple lines.
/// Rejects malformed headers, out-of-range literals, clause count mismatches
/// and a missing final 0.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::filesystem::path& path);

}  // namespace bnsat
