#include "bnsat/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace bnsat {

const char* to_string(ClauseBlock block) {
  switch (block) {
    case ClauseBlock::condition: return "condition";
    case ClauseBlock::fixed_points: return "fixed-points";
    case ClauseBlock::circuits: return "circuits";
    case ClauseBlock::unit: return "unit";
  }
  return "?";
}

CnfFormula::CnfFormula(int var_count) : var_count_(var_count), offsets_{0} {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
}

std::span<const Lit> CnfFormula::clause(std::size_t index) const {
  return std::span<const Lit>(literals_.data() + offsets_[index],
                              literals_.data() + offsets_[index + 1]);
}

void CnfFormula::add_clause(std::span<const Lit> literals) {
  if (literals.empty()) throw std::invalid_argument("empty clause");
  for (std::size_t a = 0; a < literals.size(); ++a) {
    Lit lit = literals[a];
    if (lit == 0 || var_of(lit) > var_count_)
      throw std::invalid_argument("literal " + std::to_string(lit) +
                                  " out of range");
    for (std::size_t b = 0; b < a; ++b) {
      if (literals[b] == lit)
        throw std::invalid_argument("duplicate literal in clause");
      if (literals[b] == -lit)
        throw std::invalid_argument("tautological clause");
    }
  }
  literals_.insert(literals_.end(), literals.begin(), literals.end());
  offsets_.push_back(literals_.size());
}

void CnfFormula::add_clause(std::initializer_list<Lit> literals) {
  add_clause(std::span<const Lit>(literals.begin(), literals.end()));
}

void CnfFormula::begin_block(ClauseBlock tag) {
  block_starts_.emplace_back(tag, clause_count());
}

std::vector<CnfFormula::BlockInfo> CnfFormula::blocks() const {
  std::vector<BlockInfo> result;
  for (std::size_t b = 0; b < block_starts_.size(); ++b) {
    std::size_t last = b + 1 < block_starts_.size() ? block_starts_[b + 1].second
                                                    : clause_count();
    result.push_back({block_starts_[b].first, block_starts_[b].second, last});
  }
  return result;
}

std::size_t CnfFormula::block_size(ClauseBlock tag) const {
  for (const BlockInfo& info : blocks())
    if (info.tag == tag) return info.last - info.first;
  return 0;
}

void write_dimacs(std::ostream& out, const CnfFormula& formula,
                  bool emit_comments) {
  std::vector<CnfFormula::BlockInfo> blocks =
      emit_comments ? formula.blocks() : std::vector<CnfFormula::BlockInfo>{};
  std::size_t next_block = 0;

  std::string buffer;
  buffer.reserve(1 << 16);
  char digits[16];

  buffer += "p cnf ";
  buffer += std::to_string(formula.var_count());
  buffer += ' ';
  buffer += std::to_string(formula.clause_count());
  buffer += '\n';

  for (std::size_t c = 0; c < formula.clause_count(); ++c) {
    while (next_block < blocks.size() && blocks[next_block].first == c) {
      const CnfFormula::BlockInfo& info = blocks[next_block];
      buffer += "c block ";
      buffer += to_string(info.tag);
      buffer += ' ';
      buffer += std::to_string(info.last - info.first);
      buffer += " clauses\n";
      ++next_block;
    }
    for (Lit lit : formula.clause(c)) {
      auto [end, ec] = std::to_chars(digits, digits + sizeof digits, lit);
      buffer.append(digits, end);
      buffer += ' ';
    }
    buffer += "0\n";
    if (buffer.size() > (1 << 16) - 256) {
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

void write_dimacs_file(const std::filesystem::path& path,
                       const CnfFormula& formula, bool emit_comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  write_dimacs(out, formula, emit_comments);
  if (!out.flush()) throw ParseError("write failed for " + path.string());
}

CnfFormula parse_dimacs(std::istream& in) {
  std::string token;
  // Skip leading comments.
  while (in >> token) {
    if (token == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    break;
  }
  if (!in || token != "p") throw ParseError("DIMACS: missing 'p cnf' header");
  long long vars = -1, clauses = -1;
  if (!(in >> token) || token != "cnf" || !(in >> vars >> clauses) ||
      vars < 0 || clauses < 0)
    throw ParseError("DIMACS: malformed 'p cnf' header");
  if (vars > (1 << 30)) throw ParseError("DIMACS: unreasonable variable count");

  CnfFormula formula(static_cast<int>(vars));
  std::vector<Lit> current;
  while (in >> token) {
    if (token == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    long long value;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                     value);
    if (ec != std::errc{} || end != token.data() + token.size())
      throw ParseError("DIMACS: bad token '" + token + "'");
    if (value == 0) {
      formula.add_clause(current);
      current.clear();
      continue;
    }
    if (value < -vars || value > vars)
      throw ParseError("DIMACS: literal " + std::to_string(value) +
                       " out of range for " + std::to_string(vars) +
                       " variables");
    current.push_back(static_cast<Lit>(value));
  }
  if (!current.empty())
    throw ParseError("DIMACS: last clause is missing its terminating 0");
  if (formula.clause_count() != static_cast<std::size_t>(clauses))
    throw ParseError("DIMACS: header promises " + std::to_string(clauses) +
                     " clauses, found " +
                     std::to_string(formula.clause_count()));
  return formula;
}

CnfFormula parse_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CNF file " + path.string());
  return parse_dimacs(in);
}

}  // namespace bnsat
