#include "bnsat/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <queue>

namespace bnsat {

std::vector<State> async_successors(const BooleanMap& f, const State& x) {
  if (x.dimension() != f.dimension())
    throw std::invalid_argument("async_successors: dimension mismatch");
  Word unstable = f.image_word(x.word()) ^ x.word();
  std::vector<State> result;
  result.reserve(std::popcount(unstable));
  for (int j = 1; j <= f.dimension(); ++j)
    if ((unstable >> (j - 1)) & 1u) result.push_back(x.flipped(j));
  std::sort(result.begin(), result.end());
  return result;
}

bool is_fixed_point(const BooleanMap& f, const State& x) {
  return f.image_word(x.word()) == x.word();
}

std::vector<State> fixed_points(const BooleanMap& f) {
  std::vector<State> result;
  for (Word w = 0; w < f.state_count(); ++w)
    if (f.image_word(w) == w) result.emplace_back(w, f.dimension());
  return result;
}

namespace {

// Iterative Tarjan over the asynchronous transition graph. Successor sets are
// derived on the fly from f(x) XOR x, so no explicit edge list is stored.
struct SccResult {
  std::vector<int> component;          // state word -> component id
  std::vector<std::vector<Word>> members;  // component id -> state words
};

SccResult tarjan_components(const BooleanMap& f) {
  const std::size_t count = f.state_count();
  constexpr int kUnvisited = -1;
  SccResult out;
  out.component.assign(count, kUnvisited);

  std::vector<int> index(count, kUnvisited);
  std::vector<int> lowlink(count, 0);
  std::vector<bool> on_stack(count, false);
  std::vector<Word> stack;
  int next_index = 0;

  struct Frame {
    Word state;
    Word pending;  // unstable coordinates not yet explored (bitmask)
  };
  std::vector<Frame> frames;

  for (Word root = 0; root < count; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, f.image_word(root) ^ root});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& top = frames.back();
      if (top.pending) {
        Word bit = top.pending & (~top.pending + 1);
        top.pending ^= bit;
        Word succ = top.state ^ bit;
        if (index[succ] == kUnvisited) {
          index[succ] = lowlink[succ] = next_index++;
          stack.push_back(succ);
          on_stack[succ] = true;
          frames.push_back({succ, f.image_word(succ) ^ succ});
        } else if (on_stack[succ]) {
          lowlink[top.state] = std::min(lowlink[top.state], index[succ]);
        }
        continue;
      }
      Word v = top.state;
      frames.pop_back();
      if (!frames.empty())
        lowlink[frames.back().state] =
            std::min(lowlink[frames.back().state], lowlink[v]);
      if (lowlink[v] == index[v]) {
        std::vector<Word> scc;
        Word w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = static_cast<int>(out.members.size());
          scc.push_back(w);
        } while (w != v);
        out.members.push_back(std::move(scc));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Attractor> attractors(const BooleanMap& f) {
  SccResult sccs = tarjan_components(f);

  // A component is an attractor iff no transition leaves it.
  std::vector<Attractor> result;
  for (const std::vector<Word>& members : sccs.members) {
    bool terminal = true;
    for (Word w : members) {
      Word unstable = f.image_word(w) ^ w;
      while (unstable && terminal) {
        Word bit = unstable & (~unstable + 1);
        unstable ^= bit;
        terminal = sccs.component[w ^ bit] == sccs.component[w];
      }
      if (!terminal) break;
    }
    if (!terminal) continue;
    Attractor a;
    a.kind = members.size() == 1 ? AttractorKind::fixed_point
                                 : AttractorKind::cyclic;
    for (Word w : members) a.states.emplace_back(w, f.dimension());
    std::sort(a.states.begin(), a.states.end());
    result.push_back(std::move(a));
  }
  std::sort(result.begin(), result.end(),
            [](const Attractor& a, const Attractor& b) {
              return a.states.front() < b.states.front();
            });
  return result;
}

std::vector<HypercubePath> acyclic_paths_from(const State& x, int max_length) {
  std::vector<HypercubePath> paths;
  for_each_acyclic_path(x, max_length,
                        [&](const HypercubePath& p) { paths.push_back(p); });
  return paths;
}

std::uint64_t count_acyclic_paths(const State& x, int max_length) {
  std::uint64_t count = 0;
  for_each_acyclic_path(x, max_length, [&](const HypercubePath&) { ++count; });
  return count;
}

namespace {

// Breadth-first scan of states within the given walk-length bound; calls
// visit(state word, depth) once per reachable state, in increasing depth.
template <typename Visit>
void bfs_within(const BooleanMap& f, const State& x, int max_depth,
                Visit&& visit) {
  std::vector<bool> seen(f.state_count(), false);
  std::queue<std::pair<Word, int>> queue;
  seen[x.word()] = true;
  queue.push({x.word(), 0});
  while (!queue.empty()) {
    auto [w, depth] = queue.front();
    queue.pop();
    if (!visit(w, depth)) return;
    if (depth == max_depth) continue;
    Word unstable = f.image_word(w) ^ w;
    while (unstable) {
      Word bit = unstable & (~unstable + 1);
      unstable ^= bit;
      if (!seen[w ^ bit]) {
        seen[w ^ bit] = true;
        queue.push({w ^ bit, depth + 1});
      }
    }
  }
}

}  // namespace

bool reachable_non_fixed_within(const BooleanMap& f, const State& x, int k) {
  if (x.dimension() != f.dimension())
    throw std::invalid_argument("reachable_non_fixed_within: dimension mismatch");
  if (k < 0) throw std::invalid_argument("walk length bound must be >= 0");
  bool ok = true;
  bfs_within(f, x, k, [&](Word w, int) {
    ok = f.image_word(w) != w;
    return ok;
  });
  return ok;
}

int distance_to_nearest_fixed_point(const BooleanMap& f, const State& x) {
  int found = -1;
  bfs_within(f, x, static_cast<int>(f.state_count()), [&](Word w, int depth) {
    if (f.image_word(w) == w) {
      found = depth;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace bnsat
