#include "bnsat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <random>
#include <stdexcept>

namespace bnsat {

bool evaluate(const CnfFormula& formula, const Assignment& assignment) {
  if (assignment.var_count() < formula.var_count())
    throw std::invalid_argument("assignment does not cover the formula");
  for (std::size_t c = 0; c < formula.clause_count(); ++c) {
    bool satisfied = false;
    for (Lit lit : formula.clause(c))
      if (assignment.satisfies(lit)) {
        satisfied = true;
        break;
      }
    if (!satisfied) return false;
  }
  return true;
}

Assignment assignment_from_map(const BooleanMap& f) {
  const int n = f.dimension();
  Assignment a(static_cast<int>(n * f.state_count()));
  for (Word w = 0; w < f.state_count(); ++w)
    for (int i = 1; i <= n; ++i)
      a.set(static_cast<int>(n * w + i), (f.image_word(w) >> (i - 1)) & 1u);
  return a;
}

BooleanMap decode_model(const Assignment& assignment, int n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("decode_model: bad dimension");
  const std::size_t states = std::size_t{1} << n;
  if (assignment.var_count() != static_cast<int>(n * states))
    throw std::invalid_argument("decode_model: expected " +
                                std::to_string(n * states) + " variables, got " +
                                std::to_string(assignment.var_count()));
  std::vector<Word> table(states, 0);
  for (std::size_t w = 0; w < states; ++w)
    for (int i = 1; i <= n; ++i)
      if (assignment.value(static_cast<int>(n * w + i)))
        table[w] |= Word{1} << (i - 1);
  return BooleanMap(n, std::move(table));
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::sat: return "SAT";
    case Verdict::unsat: return "UNSAT";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

// Conflict-driven clause learning in the usual MiniSat shape: two watched
// literals per clause, first-UIP learning with local minimization, decaying
// activity heap, phase saving (seeded to false) and Luby restarts.
class Cdcl {
 public:
  Cdcl(const CnfFormula& formula, const SolveLimits& limits)
      : nvars_(formula.var_count()), limits_(limits) {
    assigns_.assign(nvars_ + 1, 0);
    level_.assign(nvars_ + 1, 0);
    reason_.assign(nvars_ + 1, -1);
    activity_.assign(nvars_ + 1, 0.0);
    saved_phase_.assign(nvars_ + 1, false);
    seen_.assign(nvars_ + 1, false);
    heap_pos_.assign(nvars_ + 1, -1);
    watches_.assign(2 * std::size_t(nvars_) + 2, {});

    if (limits.seed != 0) {
      std::mt19937 rng(limits.seed);
      std::uniform_real_distribution<double> jitter(0.0, 1e-6);
      for (int v = 1; v <= nvars_; ++v) activity_[v] = jitter(rng);
    }
    for (int v = 1; v <= nvars_; ++v) heap_insert(v);

    ok_ = true;
    std::vector<Lit> scratch;
    for (std::size_t c = 0; c < formula.clause_count() && ok_; ++c) {
      std::span<const Lit> lits = formula.clause(c);
      scratch.assign(lits.begin(), lits.end());
      add_problem_clause(scratch);
    }
  }

  SolveResult run() {
    SolveResult result;
    if (ok_) result.verdict = search();
    else result.verdict = Verdict::unsat;
    result.stats = stats_;
    if (result.verdict == Verdict::sat) {
      Assignment model(nvars_);
      for (int v = 1; v <= nvars_; ++v) model.set(v, assigns_[v] > 0);
      result.model = std::move(model);
    }
    return result;
  }

 private:
  struct Clause {
    std::vector<Lit> lits;
    double activity = 0.0;
    bool learned = false;
    bool deleted = false;
  };
  struct Watcher {
    int cref;
    Lit blocker;
  };

  static std::size_t watch_index(Lit lit) {
    return lit > 0 ? 2 * std::size_t(lit - 1) : 2 * std::size_t(-lit - 1) + 1;
  }
  int value(Lit lit) const {  // +1 true, -1 false, 0 unassigned
    int v = assigns_[var_of(lit)];
    return lit > 0 ? v : -v;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  // ---- variable order heap (max activity, ties to the lowest index) ----

  bool heap_before(int a, int b) const {
    return activity_[a] > activity_[b] ||
           (activity_[a] == activity_[b] && a < b);
  }
  void heap_sift_up(std::size_t i) {
    int v = heap_[i];
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!heap_before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_pos_[heap_[i]] = static_cast<int>(i);
      i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<int>(i);
  }
  void heap_sift_down(std::size_t i) {
    int v = heap_[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && heap_before(heap_[child + 1], heap_[child]))
        ++child;
      if (!heap_before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_pos_[heap_[i]] = static_cast<int>(i);
      i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<int>(i);
  }
  void heap_insert(int v) {
    if (heap_pos_[v] >= 0) return;
    heap_.push_back(v);
    heap_pos_[v] = static_cast<int>(heap_.size()) - 1;
    heap_sift_up(heap_.size() - 1);
  }
  int heap_pop() {
    int v = heap_[0];
    heap_pos_[v] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_pos_[heap_[0]] = 0;
      heap_sift_down(0);
    }
    return v;
  }
  void heap_update(int v) {
    if (heap_pos_[v] >= 0) heap_sift_up(static_cast<std::size_t>(heap_pos_[v]));
  }

  // ---- activities ----

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (int u = 1; u <= nvars_; ++u) activity_[u] *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_update(v);
  }
  void bump_clause(Clause& c) {
    c.activity += cla_inc_;
    if (c.activity > 1e20) {
      for (Clause& d : clauses_) d.activity *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }

  // ---- clause management ----

  void attach(int cref) {
    const Clause& c = clauses_[cref];
    watches_[watch_index(c.lits[0])].push_back({cref, c.lits[1]});
    watches_[watch_index(c.lits[1])].push_back({cref, c.lits[0]});
  }

  void add_problem_clause(std::vector<Lit>& lits) {
    std::sort(lits.begin(), lits.end(),
              [](Lit a, Lit b) { return var_of(a) < var_of(b) || (var_of(a) == var_of(b) && a < b); });
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
      if (lits[i] == -lits[i + 1]) return;  // tautology
    std::vector<Lit> kept;
    for (Lit lit : lits) {
      if (value(lit) > 0) return;  // satisfied at root
      if (value(lit) == 0) kept.push_back(lit);
    }
    if (kept.empty()) {
      ok_ = false;
      return;
    }
    if (kept.size() == 1) {
      enqueue(kept[0], -1);
      ok_ = propagate() == -1;
      return;
    }
    clauses_.push_back({std::move(kept), 0.0, false, false});
    attach(static_cast<int>(clauses_.size()) - 1);
  }

  bool locked(int cref) const {
    const Clause& c = clauses_[cref];
    int v = var_of(c.lits[0]);
    return reason_[v] == cref && value(c.lits[0]) > 0;
  }

  void reduce_db() {
    std::vector<int> candidates;
    for (int cref = 0; cref < static_cast<int>(clauses_.size()); ++cref) {
      const Clause& c = clauses_[cref];
      if (c.learned && !c.deleted && c.lits.size() > 2 && !locked(cref))
        candidates.push_back(cref);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return clauses_[a].activity < clauses_[b].activity ||
             (clauses_[a].activity == clauses_[b].activity && a < b);
    });
    for (std::size_t i = 0; i < candidates.size() / 2; ++i) {
      Clause& c = clauses_[candidates[i]];
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
      --live_learned_;
    }
    // Watchers of deleted clauses are dropped lazily during propagation.
  }

  // ---- search ----

  void enqueue(Lit p, int reason) {
    int v = var_of(p);
    assert(assigns_[v] == 0);
    assigns_[v] = p > 0 ? 1 : -1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(p);
  }

  // Returns the conflicting clause ref, or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      Lit p = trail_[qhead_++];  // p is now true; visit clauses watching -p
      std::vector<Watcher>& ws = watches_[watch_index(-p)];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        Watcher w = ws[i];
        if (clauses_[w.cref].deleted) continue;  // drop
        if (value(w.blocker) > 0) {
          ws[keep++] = w;
          continue;
        }
        Clause& c = clauses_[w.cref];
        if (c.lits[0] == -p) std::swap(c.lits[0], c.lits[1]);
        assert(c.lits[1] == -p);
        if (value(c.lits[0]) > 0) {
          ws[keep++] = {w.cref, c.lits[0]};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (value(c.lits[k]) >= 0) {
            std::swap(c.lits[1], c.lits[k]);
            watches_[watch_index(c.lits[1])].push_back({w.cref, c.lits[0]});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        // Unit or conflicting.
        ws[keep++] = w;
        if (value(c.lits[0]) < 0) {
          for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
          ws.resize(keep);
          qhead_ = trail_.size();
          return w.cref;
        }
        ++stats_.propagations;
        enqueue(c.lits[0], w.cref);
      }
      ws.resize(keep);
    }
    return -1;
  }

  void cancel_until(int target_level) {
    if (decision_level() <= target_level) return;
    std::size_t bound = trail_lim_[target_level];
    for (std::size_t i = trail_.size(); i-- > bound;) {
      int v = var_of(trail_[i]);
      saved_phase_[v] = assigns_[v] > 0;
      assigns_[v] = 0;
      reason_[v] = -1;
      heap_insert(v);
    }
    trail_.resize(bound);
    trail_lim_.resize(target_level);
    qhead_ = trail_.size();
  }

  // First-UIP learning; fills learnt (asserting literal first) and returns
  // the backtrack level.
  int analyze(int confl, std::vector<Lit>& learnt) {
    learnt.clear();
    learnt.push_back(0);  // slot for the asserting literal
    int path_count = 0;
    Lit p = 0;
    std::size_t index = trail_.size();
    std::vector<int> to_clear;

    do {
      assert(confl >= 0);
      Clause& c = clauses_[confl];
      if (c.learned) bump_clause(c);
      for (std::size_t j = (p == 0 ? 0 : 1); j < c.lits.size(); ++j) {
        Lit q = c.lits[j];
        int v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = true;
        to_clear.push_back(v);
        bump_var(v);
        if (level_[v] >= decision_level())
          ++path_count;
        else
          learnt.push_back(q);
      }
      while (!seen_[var_of(trail_[index - 1])]) --index;
      p = trail_[index - 1];
      --index;
      confl = reason_[var_of(p)];
      seen_[var_of(p)] = false;
      --path_count;
    } while (path_count > 0);
    learnt[0] = -p;
    seen_[var_of(p)] = true;  // keep for minimization bookkeeping
    to_clear.push_back(var_of(p));

    // Local minimization: a literal implied by seen/root literals is
    // redundant.
    std::size_t kept = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      int v = var_of(learnt[i]);
      int r = reason_[v];
      bool redundant = r >= 0;
      if (r >= 0) {
        const Clause& rc = clauses_[r];
        for (std::size_t j = 1; j < rc.lits.size(); ++j) {
          int u = var_of(rc.lits[j]);
          if (!seen_[u] && level_[u] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) learnt[kept++] = learnt[i];
    }
    learnt.resize(kept);

    int bt_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i)
        if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      bt_level = level_[var_of(learnt[1])];
    }
    for (int v : to_clear) seen_[v] = false;
    return bt_level;
  }

  Lit pick_branch() {
    while (!heap_.empty()) {
      int v = heap_pop();
      if (assigns_[v] == 0) return saved_phase_[v] ? v : -v;
    }
    return 0;
  }

  static std::uint64_t luby(std::uint64_t i) {
    // Finite subsequences of the Luby sequence: 1,1,2,1,1,2,4,...
    std::uint64_t k = 1;
    while ((std::uint64_t{1} << k) - 1 < i + 1) ++k;
    while ((std::uint64_t{1} << k) - 1 != i + 1) {
      i -= (std::uint64_t{1} << (k - 1)) - 1;
      k = 1;
      while ((std::uint64_t{1} << k) - 1 < i + 1) ++k;
    }
    return std::uint64_t{1} << (k - 1);
  }

  Verdict search() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    std::uint64_t restarts = 0;
    std::uint64_t restart_budget = 128 * luby(0);
    std::uint64_t conflicts_since_restart = 0;
    std::vector<Lit> learnt;

    for (;;) {
      int confl = propagate();
      if (confl != -1) {
        ++stats_.conflicts;
        ++conflicts_since_restart;
        if (decision_level() == 0) return Verdict::unsat;
        int bt_level = analyze(confl, learnt);
        cancel_until(bt_level);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          clauses_.push_back({learnt, 0.0, true, false});
          int cref = static_cast<int>(clauses_.size()) - 1;
          bump_clause(clauses_[cref]);
          attach(cref);
          ++stats_.learned;
          ++live_learned_;
          enqueue(learnt[0], cref);
        }
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;

        if (stats_.conflicts >= limits_.max_conflicts) return Verdict::unknown;
        if (limits_.max_seconds > 0 && (stats_.conflicts & 1023) == 0 &&
            std::chrono::duration<double>(clock::now() - start).count() >
                limits_.max_seconds)
          return Verdict::unknown;
      } else {
        if (conflicts_since_restart >= restart_budget) {
          cancel_until(0);
          conflicts_since_restart = 0;
          restart_budget = 128 * luby(++restarts);
          continue;
        }
        if (live_learned_ > 4000 + 1000 * reductions_) {
          reduce_db();
          ++reductions_;
        }
        Lit next = pick_branch();
        if (next == 0) return Verdict::sat;
        ++stats_.decisions;
        trail_lim_.push_back(trail_.size());
        enqueue(next, -1);
      }
    }
  }

  int nvars_;
  SolveLimits limits_;
  bool ok_ = false;

  std::vector<Clause> clauses_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  std::vector<bool> saved_phase_;
  std::vector<bool> seen_;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::uint64_t live_learned_ = 0;
  std::uint64_t reductions_ = 0;

  SolveStats stats_;
};

}  // namespace

SolveResult solve(const CnfFormula& formula, const SolveLimits& limits) {
  Cdcl solver(formula, limits);
  SolveResult result = solver.run();
  if (result.verdict == Verdict::sat) {
    assert(result.model.has_value());
    if (!evaluate(formula, *result.model))
      throw std::logic_error("internal solver produced an invalid model");
  }
  return result;
}

}  // namespace bnsat
