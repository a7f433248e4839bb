#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "bnsat/encoder.hpp"
#include "bnsat/regulatory.hpp"
#include "bnsat/solver.hpp"
#include "test_util.hpp"

using namespace bnsat;
using namespace bnsat::testing;

TEST_CASE("assignments round-trip through map decoding") {
  std::mt19937 rng(31);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 50; ++t) {
      BooleanMap f = random_map(rng, n);
      Assignment a = assignment_from_map(f);
      CHECK(a.var_count() == n << n);
      CHECK(decode_model(a, n) == f);
      CHECK(assignment_from_map(decode_model(a, n)) == a);
      // Spot the indexing convention on one random cell.
      std::uniform_int_distribution<Word> word(0, f.state_count() - 1);
      State x(word(rng), n);
      std::uniform_int_distribution<int> coord(1, n);
      int i = coord(rng);
      CHECK(a.value(var_index(i, x)) == f.component(i, x));
    }
  }
  CHECK_THROWS_AS(decode_model(Assignment(7), 2), std::invalid_argument);
  CHECK_THROWS_AS(decode_model(Assignment(8), 3), std::invalid_argument);
}

TEST_CASE("evaluate checks every clause") {
  CnfFormula f(3);
  f.add_clause({1, -2});
  f.add_clause({3});
  Assignment a(3);
  CHECK_FALSE(evaluate(f, a));  // all-false fails the unit clause
  a.set(3, true);
  CHECK(evaluate(f, a));
  a.set(2, true);
  CHECK_FALSE(evaluate(f, a));
  a.set(1, true);
  CHECK(evaluate(f, a));
  CHECK_THROWS_AS(evaluate(f, Assignment(2)), std::invalid_argument);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(Verdict::sat)) == "SAT");
  CHECK(std::string(to_string(Verdict::unsat)) == "UNSAT");
  CHECK(std::string(to_string(Verdict::unknown)) == "unknown");
}

TEST_CASE("trivial formulas") {
  CnfFormula empty(4);
  SolveResult r = solve(empty);
  CHECK(r.verdict == Verdict::sat);
  REQUIRE(r.model.has_value());
  CHECK(evaluate(empty, *r.model));

  CnfFormula contradiction(1);
  contradiction.add_clause({1});
  contradiction.add_clause({-1});
  CHECK(solve(contradiction).verdict == Verdict::unsat);

  CnfFormula chain(3);
  chain.add_clause({1});
  chain.add_clause({-1, 2});
  chain.add_clause({-2, 3});
  r = solve(chain);
  REQUIRE(r.verdict == Verdict::sat);
  CHECK(r.model->value(1));
  CHECK(r.model->value(2));
  CHECK(r.model->value(3));
}

TEST_CASE("fuzz against exhaustive evaluation") {
  std::mt19937 rng(2468);
  std::uniform_int_distribution<int> small_vars(2, 12);
  std::uniform_int_distribution<int> big_vars(13, 16);
  std::uniform_int_distribution<int> width(1, 5);

  auto run = [&](int vars) {
    // Around the SAT/UNSAT threshold so both verdicts occur often.
    std::uniform_int_distribution<int> clauses(1, vars * 5);
    CnfFormula f = random_cnf(rng, vars, clauses(rng), width(rng) + 1);
    Verdict expected = brute_force_verdict(f);
    SolveResult r = solve(f);
    REQUIRE(r.verdict == expected);
    if (r.verdict == Verdict::sat) {
      REQUIRE(r.model.has_value());
      CHECK(evaluate(f, *r.model));
    } else {
      CHECK_FALSE(r.model.has_value());
    }
  };

  for (int t = 0; t < 1100; ++t) run(small_vars(rng));
  for (int t = 0; t < 60; ++t) run(big_vars(rng));
}

TEST_CASE("question formulas solve to the known verdicts") {
  CHECK(solve(build_q1(2, 2)).verdict == Verdict::unsat);
  CHECK(solve(build_q1(3, 4)).verdict == Verdict::unsat);
  CHECK(solve(build_q2(2)).verdict == Verdict::unsat);
  CHECK(solve(build_q2(3)).verdict == Verdict::unsat);

  // One bound below the threshold a witness map exists.
  SolveResult r = solve(build_q1(3, 3));
  REQUIRE(r.verdict == Verdict::sat);
  BooleanMap f = decode_model(*r.model, 3);
  CHECK_FALSE(has_local_negative_circuit(f));
  CHECK_FALSE(is_fixed_point(f, origin(3)));
  CHECK(reachable_non_fixed_within(f, origin(3), 3));
}

TEST_CASE("budgets yield unknown instead of wrong answers") {
  CnfFormula hard = build_q1(4, 6);

  SolveResult capped = solve(hard, {.max_conflicts = 10});
  CHECK(capped.verdict == Verdict::unknown);
  CHECK_FALSE(capped.model.has_value());
  CHECK(capped.stats.conflicts >= 10);

  SolveResult timed = solve(hard, {.max_seconds = 1e-9});
  CHECK(timed.verdict == Verdict::unknown);

  // The same instance without limits is settled.
  CHECK(solve(hard).verdict == Verdict::unsat);
}

TEST_CASE("solving is deterministic for a fixed seed") {
  CnfFormula f = build_q1(3, 4);
  SolveResult a = solve(f, {.seed = 5});
  SolveResult b = solve(f, {.seed = 5});
  CHECK(a.verdict == b.verdict);
  CHECK(a.stats.conflicts == b.stats.conflicts);
  CHECK(a.stats.decisions == b.stats.decisions);
  CHECK(a.stats.propagations == b.stats.propagations);

  std::mt19937 rng(97);
  CnfFormula sat = random_cnf(rng, 10, 20, 4);
  while (brute_force_verdict(sat) != Verdict::sat)
    sat = random_cnf(rng, 10, 20, 4);
  for (unsigned seed = 0; seed < 8; ++seed) {
    SolveResult r = solve(sat, {.seed = seed});
    REQUIRE(r.verdict == Verdict::sat);
    CHECK(evaluate(sat, *r.model));
    CHECK(solve(sat, {.seed = seed}).model == r.model);
  }
}

TEST_CASE("search statistics are populated") {
  SolveResult r = solve(build_q1(3, 4));
  CHECK(r.verdict == Verdict::unsat);
  CHECK(r.stats.conflicts > 0);
  CHECK(r.stats.decisions > 0);
  CHECK(r.stats.propagations > 0);
  CHECK(r.stats.learned > 0);
}
