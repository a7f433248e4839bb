#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bnsat/state.hpp"

namespace bnsat {

struct SignedEdge {
  int source;  // 1-based node index
  int target;
  int sign;  // +1 or -1

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Local regulatory graph G_f(x): edge j -> i present when flipping
/// coordinate j changes f_i, signed by the direction of that change. At most
/// one edge per ordered pair.
class LocalGraph {
 public:
  explicit LocalGraph(int n);

  int dimension() const { return n_; }
  /// +1 or -1 when the edge source -> target exists, 0 otherwise.
  int sign(int source, int target) const;
  bool has_edge(int source, int target) const {
    return sign(source, target) != 0;
  }
  void set_sign(int source, int target, int sign);

  /// Edges sorted by (source, target, sign).
  std::vector<SignedEdge> edges() const;

 private:
  int n_;
  std::vector<std::int8_t> sign_;  // (source-1)*n + (target-1)
};

/// Global regulatory graph: union of the local graphs over all states.
/// Parallel edges of opposite sign are allowed, so each ordered pair carries
/// up to two edges.
class GlobalGraph {
 public:
  explicit GlobalGraph(int n);

  int dimension() const { return n_; }
  bool has_edge(int source, int target, int sign) const;
  void add_edge(int source, int target, int sign);
  std::vector<SignedEdge> edges() const;

 private:
  int n_;
  std::vector<std::uint8_t> mask_;  // bit 0: positive edge, bit 1: negative
};

LocalGraph local_graph(const BooleanMap& f, const State& x);
GlobalGraph global_graph(const BooleanMap& f);

/// Elementary circuit of the complete graph on {1..n}: a closed sequence of
/// distinct nodes. Canonical rotation puts the smallest node first, so two
/// rotations of the same circuit compare equal.
class Circuit {
 public:
  explicit Circuit(std::vector<int> nodes);

  int length() const { return static_cast<int>(nodes_.size()); }
  const std::vector<int>& nodes() const { return nodes_; }
  /// Edge t (0-based) of the circuit, node t -> node t+1 cyclically.
  std::pair<int, int> edge(int t) const;

  std::string to_string() const;  // "1 -> 2 -> 1"

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend auto operator<=>(const Circuit&, const Circuit&) = default;

 private:
  std::vector<int> nodes_;
};

/// Every elementary circuit of the complete directed graph on {1..n}, each
/// once in canonical form. Ordered by start (= smallest) node, then
/// depth-first by ascending extension, so shorter circuits precede their
/// extensions. The count is sum over k of C(n,k)*(k-1)!.
std::vector<Circuit> enumerate_circuits(int n);

/// Product of the edge signs along c when every edge of c exists in g;
/// nullopt when some edge is absent.
std::optional<int> circuit_sign(const LocalGraph& g, const Circuit& c);

struct NegativeCircuitWitness {
  State state;
  Circuit circuit;
};

/// First (state, circuit) pair, states ascending and circuits in
/// enumerate_circuits order, whose circuit is negative in the local graph at
/// that state. nullopt when no local graph admits a negative circuit.
std::optional<NegativeCircuitWitness> find_local_negative_circuit(
    const BooleanMap& f);

bool has_local_negative_circuit(const BooleanMap& f);

// Diagnostic dump: one line per edge, "j -> i +" / "j -> i -", sorted by
// (source, target, sign).
std::string dump_edges(const LocalGraph& g);
std::string dump_edges(const GlobalGraph& g);

}  // namespace bnsat
