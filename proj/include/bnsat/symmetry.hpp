#pragma once

#include <vector>

#include "bnsat/state.hpp"

namespace bnsat {

/// Permutation of {1..n}. Forward and inverse images are both precomputed:
/// acting on states needs the inverse on every coordinate.
class Permutation {
 public:
  static Permutation identity(int n);
  /// Identity except a <-> b (a == b allowed).
  static Permutation transposition(int n, int a, int b);
  /// forward[j-1] is the image of j; must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> forward);

  int size() const { return static_cast<int>(forward_.size()); }
  int map(int j) const;
  int inverse_map(int j) const;
  Permutation inverse() const;

  /// Coordinate action: result_i = x_{inverse(i)}.
  State apply(const State& x) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> forward_;
  std::vector<int> inverse_;
};

/// Automorphism of the n-hypercube: U = psi_I o sigma, a coordinate
/// permutation followed by flipping the coordinates in I. Preserves Hamming
/// distances.
class HypercubeAutomorphism {
 public:
  HypercubeAutomorphism(Permutation sigma, std::vector<int> flips);
  HypercubeAutomorphism(Permutation sigma, Word flip_mask);

  static HypercubeAutomorphism identity(int n);

  int dimension() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  Word flip_mask() const { return flip_mask_; }
  /// Flip set I, ascending.
  std::vector<int> flips() const;

  State apply(const State& x) const;
  State operator()(const State& x) const { return apply(x); }
  HypercubeAutomorphism inverse() const;

 private:
  Permutation sigma_;
  Word flip_mask_;
};

/// Conjugated map f^U = U o f o U^{-1}. The asynchronous dynamics of f and
/// f^U are isomorphic and corresponding local circuits have equal signs, so
/// any property that only depends on those structures transfers across
/// conjugation.
BooleanMap conjugate(const BooleanMap& f, const HypercubeAutomorphism& u);

struct Normalization {
  HypercubeAutomorphism automorphism;
  BooleanMap map;  // conjugate(f, automorphism)
};

/// Automorphism U sending x to the origin such that the conjugated map g
/// satisfies g_1(origin) = 1: sigma swaps coordinate 1 with the smallest
/// coordinate unstable at x, and the flip set zeroes the permuted x. Requires
/// f(x) != x.
Normalization normalize_to_origin(const BooleanMap& f, const State& x);

}  // namespace bnsat
