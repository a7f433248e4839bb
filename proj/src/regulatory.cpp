#include "bnsat/regulatory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bnsat {

namespace {

void check_node(int v, int n) {
  if (v < 1 || v > n)
    throw std::invalid_argument("node index " + std::to_string(v) +
                                " out of range 1.." + std::to_string(n));
}

std::string edge_lines(const std::vector<SignedEdge>& edges) {
  std::ostringstream out;
  for (const SignedEdge& e : edges)
    out << e.source << " -> " << e.target << ' ' << (e.sign > 0 ? '+' : '-')
        << '\n';
  return out.str();
}

}  // namespace

LocalGraph::LocalGraph(int n) : n_(n), sign_(std::size_t(n) * n, 0) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("bad local graph dimension");
}

int LocalGraph::sign(int source, int target) const {
  check_node(source, n_);
  check_node(target, n_);
  return sign_[std::size_t(source - 1) * n_ + (target - 1)];
}

void LocalGraph::set_sign(int source, int target, int sign) {
  check_node(source, n_);
  check_node(target, n_);
  if (sign != 1 && sign != -1 && sign != 0)
    throw std::invalid_argument("edge sign must be +1, -1 or 0");
  sign_[std::size_t(source - 1) * n_ + (target - 1)] =
      static_cast<std::int8_t>(sign);
}

std::vector<SignedEdge> LocalGraph::edges() const {
  std::vector<SignedEdge> result;
  for (int j = 1; j <= n_; ++j)
    for (int i = 1; i <= n_; ++i)
      if (int s = sign(j, i)) result.push_back({j, i, s});
  return result;  // already sorted by (source, target); one sign per pair
}

GlobalGraph::GlobalGraph(int n) : n_(n), mask_(std::size_t(n) * n, 0) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("bad global graph dimension");
}

bool GlobalGraph::has_edge(int source, int target, int sign) const {
  check_node(source, n_);
  check_node(target, n_);
  std::uint8_t bit = sign > 0 ? 1 : 2;
  return mask_[std::size_t(source - 1) * n_ + (target - 1)] & bit;
}

void GlobalGraph::add_edge(int source, int target, int sign) {
  check_node(source, n_);
  check_node(target, n_);
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("edge sign must be +1 or -1");
  mask_[std::size_t(source - 1) * n_ + (target - 1)] |= sign > 0 ? 1 : 2;
}

std::vector<SignedEdge> GlobalGraph::edges() const {
  std::vector<SignedEdge> result;
  for (int j = 1; j <= n_; ++j)
    for (int i = 1; i <= n_; ++i) {
      std::uint8_t m = mask_[std::size_t(j - 1) * n_ + (i - 1)];
      // sort order: -1 < +1
      if (m & 2) result.push_back({j, i, -1});
      if (m & 1) result.push_back({j, i, +1});
    }
  return result;
}

LocalGraph local_graph(const BooleanMap& f, const State& x) {
  if (x.dimension() != f.dimension())
    throw std::invalid_argument("local_graph: dimension mismatch");
  const int n = f.dimension();
  LocalGraph g(n);
  for (int j = 1; j <= n; ++j) {
    Word fx = f.image_word(x.word());
    Word fxj = f.image_word(x.flipped(j).word());
    Word changed = fx ^ fxj;
    if (!changed) continue;
    // sign = (flip direction of x_j) * (change direction of f_i)
    int dir = x.bit(j) ? -1 : +1;
    for (int i = 1; i <= n; ++i) {
      if (!((changed >> (i - 1)) & 1u)) continue;
      int rise = ((fxj >> (i - 1)) & 1u) ? +1 : -1;
      g.set_sign(j, i, dir * rise);
    }
  }
  return g;
}

GlobalGraph global_graph(const BooleanMap& f) {
  GlobalGraph g(f.dimension());
  for (Word w = 0; w < f.state_count(); ++w) {
    LocalGraph local = local_graph(f, State(w, f.dimension()));
    for (const SignedEdge& e : local.edges())
      g.add_edge(e.source, e.target, e.sign);
  }
  return g;
}

Circuit::Circuit(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("circuit must be non-empty");
  auto smallest = std::min_element(nodes_.begin(), nodes_.end());
  if (*smallest < 1) throw std::invalid_argument("circuit node out of range");
  std::rotate(nodes_.begin(), smallest, nodes_.end());
  for (std::size_t t = 1; t < nodes_.size(); ++t)
    if (std::find(nodes_.begin(), nodes_.begin() + t, nodes_[t]) !=
        nodes_.begin() + t)
      throw std::invalid_argument("circuit nodes must be distinct");
}

std::pair<int, int> Circuit::edge(int t) const {
  return {nodes_[t], nodes_[(t + 1) % nodes_.size()]};
}

std::string Circuit::to_string() const {
  std::ostringstream out;
  for (int v : nodes_) out << v << " -> ";
  out << nodes_.front();
  return out.str();
}

namespace {

void extend_circuits(std::vector<int>& nodes, std::vector<bool>& used, int n,
                     std::vector<Circuit>& out) {
  out.push_back(Circuit(nodes));
  for (int v = nodes.front() + 1; v <= n; ++v) {
    if (used[v]) continue;
    used[v] = true;
    nodes.push_back(v);
    extend_circuits(nodes, used, n, out);
    nodes.pop_back();
    used[v] = false;
  }
}

}  // namespace

std::vector<Circuit> enumerate_circuits(int n) {
  if (n < 1) throw std::invalid_argument("circuit enumeration needs n >= 1");
  std::vector<Circuit> out;
  std::vector<bool> used(n + 1, false);
  std::vector<int> nodes;
  for (int start = 1; start <= n; ++start) {
    // start is the smallest node, so only larger nodes may follow
    used[start] = true;
    nodes.push_back(start);
    extend_circuits(nodes, used, n, out);
    nodes.pop_back();
    used[start] = false;
  }
  return out;
}

std::optional<int> circuit_sign(const LocalGraph& g, const Circuit& c) {
  int product = 1;
  for (int t = 0; t < c.length(); ++t) {
    auto [from, to] = c.edge(t);
    int s = g.sign(from, to);
    if (s == 0) return std::nullopt;
    product *= s;
  }
  return product;
}

std::optional<NegativeCircuitWitness> find_local_negative_circuit(
    const BooleanMap& f) {
  std::vector<Circuit> circuits = enumerate_circuits(f.dimension());
  for (Word w = 0; w < f.state_count(); ++w) {
    State x(w, f.dimension());
    LocalGraph g = local_graph(f, x);
    for (const Circuit& c : circuits)
      if (circuit_sign(g, c) == -1) return NegativeCircuitWitness{x, c};
  }
  return std::nullopt;
}

bool has_local_negative_circuit(const BooleanMap& f) {
  return find_local_negative_circuit(f).has_value();
}

std::string dump_edges(const LocalGraph& g) { return edge_lines(g.edges()); }

std::string dump_edges(const GlobalGraph& g) { return edge_lines(g.edges()); }

}  // namespace bnsat
