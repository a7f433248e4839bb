#pragma once

#include <cstdint>
#include <vector>

#include "bnsat/cnf.hpp"
#include "bnsat/dynamics.hpp"
#include "bnsat/regulatory.hpp"
#include "bnsat/state.hpp"

namespace bnsat {

// The encodings below describe an unknown map f : {0,1}^n -> {0,1}^n by
// n * 2^n Boolean variables, one per component value f_i(x). A satisfying
// assignment is exactly a truth table; combined constraints therefore ask
// whether a map with the conjoined properties exists at all.

/// Variable for f_i(x): n * int(x) + i. Bijective over (i, x), 1-based, and
/// variable 1 is f_1 at the origin.
Lit var_index(int i, const State& x);

/// Clause asserting f(x) != x: positive literal f_i(x) where x_i = 0,
/// negative where x_i = 1. Width n, literals by ascending coordinate.
std::vector<Lit> not_fixed_clause(const State& x);

/// One not_fixed_clause per state, states ascending: 2^n clauses.
void append_no_fixed_points_clauses(CnfFormula& formula, int n);

/// Cube (conjunction of literals) asserting that circuit c is negative in
/// the local graph at x with a prescribed sign split: edges whose bit is set
/// in negative_edges are negative, the others positive. negative_edges must
/// have odd population count. Each edge j -> i contributes two literals over
/// f_i at x with coordinate j forced to 1 and to 0.
std::vector<Lit> negative_circuit_cube(const State& x, const Circuit& c,
                                       std::uint32_t negative_edges);

/// Negations of every odd-split cube for (x, c): 2^(length-1) clauses of
/// width 2*length, splits in ascending bitmask order. Their conjunction
/// forbids c from being negative in the local graph at x.
std::vector<std::vector<Lit>> negative_circuit_clauses(const State& x,
                                                       const Circuit& c);

/// For every state (ascending) and every circuit (enumerate_circuits order),
/// all clauses of negative_circuit_clauses. Clauses that coincide across
/// different (state, circuit) pairs are kept, so the block size is exactly
/// 2^n * sum over circuit lengths m of count(m) * 2^(m-1).
void append_no_local_negative_circuits_clauses(CnfFormula& formula, int n);

/// Cube asserting that pi is a path of the asynchronous dynamics: one
/// literal per step, on f_j at the step's source state where j is the
/// flipped coordinate, positive iff the step sets the coordinate.
std::vector<Lit> path_cube(const HypercubePath& pi);

/// For every acyclic hypercube path pi from the origin of length 1..k, the
/// clause (not path_cube(pi)) or not_fixed_clause(endpoint): the negated
/// path literals by step index, then the endpoint literals by coordinate.
/// Satisfied exactly when no fixed point is asynchronously reachable from
/// the origin by a nonempty path of length at most k.
void append_condition_clauses(CnfFormula& formula, int n, int k);

/// Is there a map without fixed points and without local negative circuits?
/// Blocks: fixed-points, circuits, then the unit clause f_1(origin) = 1
/// (any witness map can be normalized to satisfy it, so the unit clause only
/// prunes symmetric duplicates).
CnfFormula build_q2(int n);

/// Is there a map satisfying the k-bounded reachability condition at the
/// origin without local negative circuits? A satisfying map is a candidate
/// counterexample for "cyclic attractors force a local negative circuit";
/// unsatisfiability proves no such map exists. Blocks: condition, circuits,
/// unit.
CnfFormula build_q1(int n, int k);

}  // namespace bnsat
