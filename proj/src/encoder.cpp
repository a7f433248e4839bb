#include "bnsat/encoder.hpp"

#include <bit>
#include <stdexcept>

namespace bnsat {

Lit var_index(int i, const State& x) {
  const int n = x.dimension();
  if (i < 1 || i > n)
    throw std::invalid_argument("component index out of range");
  return static_cast<Lit>(n * x.word() + i);
}

std::vector<Lit> not_fixed_clause(const State& x) {
  std::vector<Lit> clause;
  clause.reserve(x.dimension());
  for (int i = 1; i <= x.dimension(); ++i) {
    Lit v = var_index(i, x);
    clause.push_back(x.bit(i) ? -v : v);
  }
  return clause;
}

void append_no_fixed_points_clauses(CnfFormula& formula, int n) {
  for (Word w = 0; w < (Word{1} << n); ++w)
    formula.add_clause(not_fixed_clause(State(w, n)));
}

std::vector<Lit> negative_circuit_cube(const State& x, const Circuit& c,
                                       std::uint32_t negative_edges) {
  const int m = c.length();
  if (m > 31 || negative_edges >> m)
    throw std::invalid_argument("sign split does not match circuit length");
  if (std::popcount(negative_edges) % 2 == 0)
    throw std::invalid_argument("sign split needs an odd negative count");
  std::vector<Lit> cube;
  cube.reserve(2 * m);
  for (int t = 0; t < m; ++t) {
    auto [j, i] = c.edge(t);
    Lit high = var_index(i, x.with(j, true));   // f_i with x_j := 1
    Lit low = var_index(i, x.with(j, false));   // f_i with x_j := 0
    if ((negative_edges >> t) & 1u) {
      cube.push_back(-high);  // negative interaction: falls when x_j rises
      cube.push_back(low);
    } else {
      cube.push_back(high);   // positive interaction: rises with x_j
      cube.push_back(-low);
    }
  }
  return cube;
}

std::vector<std::vector<Lit>> negative_circuit_clauses(const State& x,
                                                       const Circuit& c) {
  const int m = c.length();
  std::vector<std::vector<Lit>> clauses;
  clauses.reserve(std::size_t{1} << (m - 1));
  for (std::uint32_t split = 0; split < (std::uint32_t{1} << m); ++split) {
    if (std::popcount(split) % 2 == 0) continue;
    std::vector<Lit> clause = negative_circuit_cube(x, c, split);
    for (Lit& lit : clause) lit = -lit;
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

void append_no_local_negative_circuits_clauses(CnfFormula& formula, int n) {
  std::vector<Circuit> circuits = enumerate_circuits(n);
  for (Word w = 0; w < (Word{1} << n); ++w) {
    State x(w, n);
    for (const Circuit& c : circuits)
      for (const std::vector<Lit>& clause : negative_circuit_clauses(x, c))
        formula.add_clause(clause);
  }
}

std::vector<Lit> path_cube(const HypercubePath& pi) {
  if (pi.length() < 1) throw std::invalid_argument("path cube needs length >= 1");
  std::vector<Lit> cube;
  cube.reserve(pi.length());
  for (int s = 0; s < pi.length(); ++s) {
    const State& from = pi.nodes[s];
    const State& to = pi.nodes[s + 1];
    Word diff = from.word() ^ to.word();
    if (std::popcount(diff) != 1)
      throw std::invalid_argument("path step is not a single coordinate flip");
    int j = std::countr_zero(diff) + 1;
    Lit v = var_index(j, from);
    cube.push_back(to.bit(j) ? v : -v);
  }
  return cube;
}

void append_condition_clauses(CnfFormula& formula, int n, int k) {
  std::vector<Lit> clause;
  for_each_acyclic_path(origin(n), k, [&](const HypercubePath& pi) {
    clause = path_cube(pi);
    for (Lit& lit : clause) lit = -lit;
    for (Lit lit : not_fixed_clause(pi.terminus())) clause.push_back(lit);
    formula.add_clause(clause);
  });
}

CnfFormula build_q2(int n) {
  CnfFormula formula(n << n);
  formula.begin_block(ClauseBlock::fixed_points);
  append_no_fixed_points_clauses(formula, n);
  formula.begin_block(ClauseBlock::circuits);
  append_no_local_negative_circuits_clauses(formula, n);
  formula.begin_block(ClauseBlock::unit);
  formula.add_clause({Lit{1}});
  return formula;
}

CnfFormula build_q1(int n, int k) {
  CnfFormula formula(n << n);
  formula.begin_block(ClauseBlock::condition);
  append_condition_clauses(formula, n, k);
  formula.begin_block(ClauseBlock::circuits);
  append_no_local_negative_circuits_clauses(formula, n);
  formula.begin_block(ClauseBlock::unit);
  formula.add_clause({Lit{1}});
  return formula;
}

}  // namespace bnsat
