#include "bnsat/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bnsat {

Permutation Permutation::identity(int n) {
  std::vector<int> forward(n);
  std::iota(forward.begin(), forward.end(), 1);
  return Permutation(std::move(forward));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("transposition indices out of range");
  std::vector<int> forward(n);
  std::iota(forward.begin(), forward.end(), 1);
  std::swap(forward[a - 1], forward[b - 1]);
  return Permutation(std::move(forward));
}

Permutation::Permutation(std::vector<int> forward)
    : forward_(std::move(forward)), inverse_(forward_.size(), 0) {
  const int n = size();
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("bad permutation size");
  for (int j = 1; j <= n; ++j) {
    int image = forward_[j - 1];
    if (image < 1 || image > n || inverse_[image - 1] != 0)
      throw std::invalid_argument("permutation is not a bijection of 1..n");
    inverse_[image - 1] = j;
  }
}

int Permutation::map(int j) const {
  if (j < 1 || j > size())
    throw std::invalid_argument("permutation argument out of range");
  return forward_[j - 1];
}

int Permutation::inverse_map(int j) const {
  if (j < 1 || j > size())
    throw std::invalid_argument("permutation argument out of range");
  return inverse_[j - 1];
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

State Permutation::apply(const State& x) const {
  if (x.dimension() != size())
    throw std::invalid_argument("permutation applied to wrong dimension");
  Word bits = 0;
  for (int i = 1; i <= size(); ++i)
    if (x.bit(inverse_[i - 1])) bits |= Word{1} << (i - 1);
  return State(bits, size());
}

HypercubeAutomorphism::HypercubeAutomorphism(Permutation sigma, Word flip_mask)
    : sigma_(std::move(sigma)), flip_mask_(flip_mask) {
  if (flip_mask >> sigma_.size())
    throw std::invalid_argument("flip set exceeds dimension");
}

HypercubeAutomorphism::HypercubeAutomorphism(Permutation sigma,
                                             std::vector<int> flips)
    : HypercubeAutomorphism(std::move(sigma), Word{0}) {
  for (int j : flips) {
    if (j < 1 || j > dimension())
      throw std::invalid_argument("flip index out of range");
    flip_mask_ |= Word{1} << (j - 1);
  }
}

HypercubeAutomorphism HypercubeAutomorphism::identity(int n) {
  return HypercubeAutomorphism(Permutation::identity(n), Word{0});
}

std::vector<int> HypercubeAutomorphism::flips() const {
  std::vector<int> result;
  for (int j = 1; j <= dimension(); ++j)
    if ((flip_mask_ >> (j - 1)) & 1u) result.push_back(j);
  return result;
}

State HypercubeAutomorphism::apply(const State& x) const {
  return State(sigma_.apply(x).word() ^ flip_mask_, dimension());
}

HypercubeAutomorphism HypercubeAutomorphism::inverse() const {
  // (psi_I o sigma)^{-1} = psi_{sigma^{-1}(I)} o sigma^{-1}
  Permutation inv = sigma_.inverse();
  Word mask = inv.apply(State(flip_mask_, dimension())).word();
  return HypercubeAutomorphism(std::move(inv), mask);
}

BooleanMap conjugate(const BooleanMap& f, const HypercubeAutomorphism& u) {
  if (f.dimension() != u.dimension())
    throw std::invalid_argument("conjugate: dimension mismatch");
  HypercubeAutomorphism u_inv = u.inverse();
  return BooleanMap::from_function(f.dimension(), [&](const State& y) {
    return u.apply(f.apply(u_inv.apply(y)));
  });
}

Normalization normalize_to_origin(const BooleanMap& f, const State& x) {
  if (x.dimension() != f.dimension())
    throw std::invalid_argument("normalize_to_origin: dimension mismatch");
  Word unstable = f.image_word(x.word()) ^ x.word();
  if (!unstable)
    throw std::invalid_argument(
        "normalize_to_origin requires an unstable coordinate at x");
  const int n = f.dimension();
  int j = 1;
  while (!((unstable >> (j - 1)) & 1u)) ++j;

  Permutation sigma = Permutation::transposition(n, 1, j);
  Word flip_mask = sigma.apply(x).word();  // I = { i : sigma(x)_i != 0 }
  HypercubeAutomorphism u(std::move(sigma), flip_mask);
  return Normalization{u, conjugate(f, u)};
}

}  // namespace bnsat
