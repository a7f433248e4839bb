#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnsat/dynamics.hpp"
#include "bnsat/regulatory.hpp"
#include "bnsat/state.hpp"

namespace bnsat {

// The frame behind the antipodal construction: a 2n-state cycle through
// antipodal pairs plus three families of auxiliary states hanging off it.
// Superscripts are 1-based and wrap modulo 2n (modulo n for coordinate
// superscripts); index i is stored at position i-1.
//
//   a^1 = 0,  a^{i+1} = a^i + e^i,  so a^{n+i} = complement of a^i
//   b^i = a^i + e^{i+1},  c^i = b^i + e^{i+2},  d^i = b^i + e^{i+3}
struct AntipodalFrame {
  int n = 0;
  std::vector<State> a, b, c, d;  // 2n entries each

  // 1-based accessors with modular superscript reduction.
  const State& a_at(int i) const { return a[cycle_index(i)]; }
  const State& b_at(int i) const { return b[cycle_index(i)]; }
  const State& c_at(int i) const { return c[cycle_index(i)]; }
  const State& d_at(int i) const { return d[cycle_index(i)]; }

  std::size_t cycle_index(int i) const;  // superscript -> vector position
};

AntipodalFrame antipodal_frame(int n);  // n >= 1

// The 2n-state cycle (0, e1, e1+e2, ..., all-ones, ..., en): consecutive
// states at Hamming distance 1, state i+n the complement of state i.
std::vector<State> antipodal_cycle(int n);  // n >= 1

// The map with f(a^i) = a^{i+1}, f(b^i) = a^{i+2}, f(c^i) = f(d^i) = a^{i+4}
// and every other state fixed. The 8n special states are checked for
// pairwise distinctness before anything is assigned; a collision (any n < 6,
// in particular) raises std::invalid_argument naming the colliding states.
BooleanMap construct_antipodal_map(int n);

// Outcome of exhaustively checking the constructed map. `ok()` means the map
// is well defined, its antipodal cycle is a cyclic attractor reached from
// each a^i by a unique asynchronous step, and no state carries a local
// negative circuit.
struct AntipodalReport {
  int n = 0;
  bool well_defined = false;
  bool cycle_is_attractor = false;
  bool no_local_negative_circuit = false;
  std::optional<NegativeCircuitWitness> circuit_witness;
  std::string detail;  // witness description for whichever check failed

  bool ok() const {
    return well_defined && cycle_is_attractor && no_local_negative_circuit;
  }
};

// Runs all three checks for 6 <= n <= 7 (the exhaustive circuit scan is
// only budgeted for these sizes).
AntipodalReport verify_antipodal(int n);

std::string to_string(const AntipodalReport& report);

}  // namespace bnsat
