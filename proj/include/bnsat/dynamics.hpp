#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bnsat/state.hpp"

namespace bnsat {

/// Successors of x in the asynchronous state transition graph: the states
/// reached by flipping one coordinate i with f_i(x) != x_i. Sorted ascending
/// by state word; empty exactly when x is a fixed point.
std::vector<State> async_successors(const BooleanMap& f, const State& x);

bool is_fixed_point(const BooleanMap& f, const State& x);

/// All states with f(x) = x, ascending.
std::vector<State> fixed_points(const BooleanMap& f);

enum class AttractorKind { fixed_point, cyclic };

/// A minimal trap domain of the asynchronous dynamics, i.e. a terminal
/// strongly connected component of the transition graph.
struct Attractor {
  std::vector<State> states;  // ascending
  AttractorKind kind;         // fixed_point iff states.size() == 1

  std::size_t size() const { return states.size(); }
};

/// Attractors of the asynchronous dynamics, sorted by smallest member state.
std::vector<Attractor> attractors(const BooleanMap& f);

/// Acyclic path in the n-dimensional hypercube graph: consecutive nodes at
/// Hamming distance 1, all nodes pairwise distinct.
struct HypercubePath {
  std::vector<State> nodes;  // length() + 1 entries

  int length() const { return static_cast<int>(nodes.size()) - 1; }
  const State& origin() const { return nodes.front(); }
  const State& terminus() const { return nodes.back(); }
};

/// Visits every acyclic hypercube path that starts at x and has length
/// 1..max_length, each exactly once, in depth-first order extending by
/// ascending coordinate index. The path reference passed to the visitor is
/// reused between calls; copy it to keep it. Throws if max_length < 1.
template <typename Visitor>
void for_each_acyclic_path(const State& x, int max_length, Visitor&& visit) {
  if (max_length < 1)
    throw std::invalid_argument("path length bound must be >= 1");
  const int n = x.dimension();
  HypercubePath path;
  path.nodes.reserve(static_cast<std::size_t>(max_length) + 1);
  path.nodes.push_back(x);
  std::vector<bool> on_path(std::size_t{1} << n, false);
  on_path[x.word()] = true;

  // Explicit stack of next-coordinate-to-try per depth.
  std::vector<int> next_coord{1};
  while (!next_coord.empty()) {
    int depth = static_cast<int>(next_coord.size()) - 1;
    int j = next_coord.back()++;
    if (j > n || depth >= max_length) {
      on_path[path.nodes.back().word()] = false;
      path.nodes.pop_back();
      next_coord.pop_back();
      continue;
    }
    State candidate = path.nodes.back().flipped(j);
    if (on_path[candidate.word()]) continue;
    path.nodes.push_back(candidate);
    on_path[candidate.word()] = true;
    visit(std::as_const(path));
    next_coord.push_back(1);
  }
}

/// Materialized variant of for_each_acyclic_path. Use only for small (n, k):
/// the path count grows steeply (2,595,405 already for n=5, k=11).
std::vector<HypercubePath> acyclic_paths_from(const State& x, int max_length);

std::uint64_t count_acyclic_paths(const State& x, int max_length);

/// True iff no walk of length <= k in the asynchronous dynamics leads from x
/// to a fixed point (the length-0 walk counts: x itself must not be fixed).
bool reachable_non_fixed_within(const BooleanMap& f, const State& x, int k);

/// Length of the shortest asynchronous walk from x to a fixed point, or -1
/// when no fixed point is reachable. 0 when x itself is fixed.
int distance_to_nearest_fixed_point(const BooleanMap& f, const State& x);

}  // namespace bnsat
