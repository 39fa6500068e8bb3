#include "doctest.h"
#include "progsat/cnf.hpp"
#include "progsat/solver.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace progsat;

TEST_CASE("dimacs parsing") {
  SUBCASE("two clauses") {
    Cnf cnf = parse_dimacs("p cnf 2 2\n1 -2 0\n2 0");
    CHECK(cnf.num_vars == 2);
    REQUIRE(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[0].size() == 2);
    CHECK(cnf.clauses[0][0].to_dimacs() == 1);
    CHECK(cnf.clauses[0][1].to_dimacs() == -2);
    CHECK(cnf.clauses[1].size() == 1);
    CHECK(cnf.clauses[1][0].to_dimacs() == 2);
  }
  SUBCASE("empty clause solves to UNSAT") {
    Cnf cnf = parse_dimacs("p cnf 1 1\n0\n");
    REQUIRE(cnf.clauses.size() == 1);
    CHECK(cnf.clauses[0].empty());
    Solver s(cnf);
    CHECK(s.solve() == Result::Unsat);
  }
  SUBCASE("literal exceeding declared variables") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
  }
  SUBCASE("missing terminating zero") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  }
  SUBCASE("clause count mismatch") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  }
  SUBCASE("error carries line number") {
    try {
      parse_dimacs("c hi\np cnf 1 2\n1 0\n2 0\n");
      CHECK(false);
    } catch (const ParseError &e) {
      CHECK(e.line_no == 4);
    }
  }
  SUBCASE("comments and blank space ignored") {
    Cnf cnf = parse_dimacs("c comment\nc more\np cnf 3 1\nc mid\n1 -2 3 0\n");
    CHECK(cnf.num_vars == 3);
    CHECK(cnf.clauses.size() == 1);
  }
}

TEST_CASE("trivial verdicts") {
  SUBCASE("unsatisfiable trio") {
    Solver s;
    s.add_clause_dimacs({1, 2});
    s.add_clause_dimacs({-1});
    s.add_clause_dimacs({-2});
    CHECK(s.solve() == Result::Unsat);
  }
  SUBCASE("single positive unit") {
    Solver s;
    s.add_clause_dimacs({1});
    REQUIRE(s.solve() == Result::Sat);
    CHECK(s.model()[0] == lbool::True);
  }
}

TEST_CASE("unit propagation via probe") {
  SUBCASE("chained implications get reasons") {
    Solver s;
    s.add_clause_dimacs({-1, 2});
    s.add_clause_dimacs({-2, 3});
    auto r = s.probe(std::vector<int>{1});
    CHECK_FALSE(r.conflict);
    CHECK(r.values[0] == lbool::True);
    CHECK(r.values[1] == lbool::True);
    CHECK(r.values[2] == lbool::True);
  }
  SUBCASE("opposed implications conflict") {
    Solver s;
    s.add_clause_dimacs({-1, 2});
    s.add_clause_dimacs({-1, -2});
    auto r = s.probe(std::vector<int>{1});
    CHECK(r.conflict);
  }
  SUBCASE("no clauses, no propagation") {
    Solver s;
    s.ensure_vars(2);
    auto r = s.probe(std::vector<int>{1});
    CHECK_FALSE(r.conflict);
    CHECK(r.values[0] == lbool::True);
    CHECK(r.values[1] == lbool::Undef);
  }
}

TEST_CASE("first decision is the lowest index with negative phase") {
  Solver s;
  s.add_clause_dimacs({1, 2});
  std::vector<int> decisions;
  s.set_decision_listener([&](int d) { decisions.push_back(d); });
  REQUIRE(s.solve() == Result::Sat);
  REQUIRE(!decisions.empty());
  CHECK(decisions[0] == -1);
  // (x1 or x2) with x1 decided false forces x2.
  CHECK(s.model()[0] == lbool::False);
  CHECK(s.model()[1] == lbool::True);
}

TEST_CASE("activity bump steers the next decision and phase is saved") {
  // Deciding -x1 forces x5 and then a conflict; analysis bumps x5, learns
  // (x1), and the next decision must pick x5 with its saved true phase.
  Solver s;
  s.ensure_vars(5);
  s.add_clause_dimacs({1, 5});
  s.add_clause_dimacs({1, -5});
  std::vector<int> decisions;
  s.set_decision_listener([&](int d) { decisions.push_back(d); });
  REQUIRE(s.solve() == Result::Sat);
  REQUIRE(decisions.size() >= 2);
  CHECK(decisions[0] == -1);
  CHECK(decisions[1] == 5);
}

TEST_CASE("conflict analysis learns asserting clauses") {
  SUBCASE("binary clash learns a unit, backjumps to zero") {
    // Deciding -x1 conflicts on (x1 v x2), (x1 v -x2); resolution forces
    // the unit (x1) with backjump level 0.
    Solver s;
    s.add_clause_dimacs({1, 2});
    s.add_clause_dimacs({1, -2});
    std::vector<std::vector<int>> learnt;
    std::vector<int> levels;
    s.set_learnt_listener([&](const std::vector<int> &c, int bt) {
      learnt.push_back(c);
      levels.push_back(bt);
    });
    REQUIRE(s.solve() == Result::Sat);
    REQUIRE(learnt.size() == 1);
    CHECK(learnt[0] == std::vector<int>{1});
    CHECK(levels[0] == 0);
    CHECK(s.model()[0] == lbool::True);
  }
  SUBCASE("two decisions learn a binary clause, backjump to one") {
    Solver s;
    s.ensure_vars(3);
    s.add_clause_dimacs({1, 2, 3});
    s.add_clause_dimacs({1, 2, -3});
    std::vector<std::vector<int>> learnt;
    std::vector<int> levels;
    s.set_learnt_listener([&](const std::vector<int> &c, int bt) {
      learnt.push_back(c);
      levels.push_back(bt);
    });
    REQUIRE(s.solve() == Result::Sat);
    REQUIRE(!learnt.empty());
    std::vector<int> first = learnt[0];
    std::sort(first.begin(), first.end());
    CHECK(first == std::vector<int>{1, 2});
    CHECK(levels[0] == 1);
  }
}

TEST_CASE("learnt clauses replay to a conflict by unit propagation") {
  // The negation of any learnt clause, asserted on top of the clause
  // database as it stood when the clause was derived, must close by unit
  // propagation alone.
  int checked = 0;
  for (uint64_t seed = 1; seed <= 6; seed++) {
    Cnf cnf = testutil::random_3sat(20, 85, seed);
    Solver s(cnf);
    struct Capture {
      std::vector<int> clause;
      std::vector<std::vector<int>> db;
    };
    std::vector<Capture> captures;
    s.set_learnt_listener([&](const std::vector<int> &c, int) {
      if (captures.size() < 10) captures.push_back({c, s.clause_db_snapshot()});
    });
    s.solve();
    for (const auto &cap : captures) {
      Solver replay;
      replay.ensure_vars(20);
      bool consistent = true;
      for (const auto &cl : cap.db)
        if (!replay.add_clause_dimacs(cl)) {
          consistent = false;
          break;
        }
      std::vector<int> negated;
      for (int l : cap.clause) negated.push_back(-l);
      if (consistent) {
        auto r = replay.probe(negated);
        CHECK(r.conflict);
      }
      checked++;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("verdicts agree with exhaustive enumeration") {
  int sat = 0, unsat = 0;
  for (uint64_t seed = 0; seed < 120; seed++) {
    Cnf cnf = testutil::random_3sat(20, 85, 1000 + seed);
    bool expect = testutil::enumerate_sat(cnf);
    Solver s(cnf);
    Result got = s.solve();
    REQUIRE(got == (expect ? Result::Sat : Result::Unsat));
    if (expect) {
      CHECK(model_satisfies(cnf, s.model()));
      sat++;
    } else {
      unsat++;
    }
  }
  // The ratio 85/20 sits near the phase transition; both verdicts must occur.
  CHECK(sat > 10);
  CHECK(unsat > 10);
}

TEST_CASE("structured instances: pigeonhole and gate miters") {
  for (int holes = 2; holes <= 4; holes++) {
    Cnf cnf = testutil::pigeonhole(holes);
    if (cnf.num_vars <= 20) CHECK_FALSE(testutil::enumerate_sat(cnf));
    Solver s(cnf);
    CHECK(s.solve() == Result::Unsat);
  }
  for (uint64_t seed = 0; seed < 20; seed++) {
    Cnf miter = testutil::gate_miter(5, 5, seed, /*clone_second=*/true);
    REQUIRE(miter.num_vars <= 20);
    CHECK_FALSE(testutil::enumerate_sat(miter));
    Solver s(miter);
    CHECK(s.solve() == Result::Unsat);
  }
  for (uint64_t seed = 0; seed < 20; seed++) {
    Cnf miter = testutil::gate_miter(5, 5, 100 + seed, /*clone_second=*/false);
    bool expect = testutil::enumerate_sat(miter);
    Solver s(miter);
    CHECK(s.solve() == (expect ? Result::Sat : Result::Unsat));
  }
}

TEST_CASE("deletion ranking") {
  SUBCASE("clauses that are reasons or strong are never deleted") {
    std::vector<Solver::ClauseScore> scores(10, {5, 1.0f, false});
    CHECK(Solver::select_deletions(scores).empty());
  }
  SUBCASE("hundred deletable clauses of distinct lbd lose the worst half") {
    std::vector<Solver::ClauseScore> scores;
    for (uint32_t i = 0; i < 100; i++)
      scores.push_back({3 + i, 1.0f, true});
    auto del = Solver::select_deletions(scores);
    REQUIRE(del.size() == 50);
    std::set<int> got(del.begin(), del.end());
    for (int i = 50; i < 100; i++) CHECK(got.count(i) == 1);
  }
  SUBCASE("activity breaks lbd ties") {
    std::vector<Solver::ClauseScore> scores = {
        {4, 10.0f, true}, {4, 1.0f, true}};
    auto del = Solver::select_deletions(scores);
    REQUIRE(del.size() == 1);
    CHECK(del[0] == 1);
  }
}

TEST_CASE("verdict survives clause deletion pressure") {
  for (uint64_t seed = 0; seed < 25; seed++) {
    Cnf cnf = testutil::random_3sat(20, 85, 7000 + seed);
    Solver with(cnf);
    with.config().reduce_first = 10;
    with.config().reduce_increment = 5;
    Solver without(cnf);
    without.config().clause_deletion = false;
    Result a = with.solve();
    Result b = without.solve();
    CHECK(a == b);
  }
}

TEST_CASE("budget exhaustion reports indeterminate, never unsat") {
  Cnf hard = testutil::pigeonhole(7);
  Solver s(hard);
  s.set_budget({1, 0.0});
  CHECK(s.solve() == Result::Indeterminate);

  Solver s2(hard);
  s2.set_budget({UINT64_MAX, 0.05});
  Result r = s2.solve();
  CHECK((r == Result::Indeterminate || r == Result::Unsat));
}

TEST_CASE("fixed seed and configuration reproduce the run exactly") {
  for (uint64_t seed : {11ull, 12ull}) {
    Cnf cnf = testutil::random_3sat(20, 85, seed);
    Solver a(cnf), b(cnf);
    Result ra = a.solve(), rb = b.solve();
    CHECK(ra == rb);
    CHECK(a.stats().conflicts == b.stats().conflicts);
    CHECK(a.stats().decisions == b.stats().decisions);
    CHECK(a.stats().propagations == b.stats().propagations);
    if (ra == Result::Sat) CHECK(a.model() == b.model());
  }
}

TEST_CASE("unit assumptions pin the model") {
  Cnf cnf = parse_dimacs("p cnf 2 1\n1 2 0\n");
  Solver s(cnf);
  std::vector<Lit> assume{Lit::from_dimacs(-2)};
  REQUIRE(s.solve(assume) == Result::Sat);
  CHECK(s.model()[0] == lbool::True);
  CHECK(s.model()[1] == lbool::False);
}

TEST_CASE("restarts occur and do not disturb verdicts") {
  Cnf cnf = testutil::pigeonhole(6);
  Solver s(cnf);
  s.config().restart_base = 10;
  CHECK(s.solve() == Result::Unsat);
  CHECK(s.stats().restarts > 0);
}
