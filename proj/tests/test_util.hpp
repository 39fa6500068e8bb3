#pragma once

#include "progsat/cnf.hpp"

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

// Exhaustive SAT check over all 2^n assignments, evaluated 64 assignments
// per word. Assignment id a assigns variable v the bit (a >> v) & 1.
// Independent of the CDCL code path by construction.
inline bool enumerate_sat(const progsat::Cnf &cnf) {
  int n = cnf.num_vars;
  assert(n <= 24);
  size_t words = n >= 6 ? (size_t{1} << (n - 6)) : 1;
  uint64_t tail_mask = n >= 6 ? ~uint64_t{0} : ((uint64_t{1} << (1u << n)) - 1);

  // Per-word literal masks for variables 0..5 are fixed bit patterns.
  static const uint64_t low_pattern[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

  for (size_t w = 0; w < words; w++) {
    uint64_t word_ok = tail_mask;
    for (const auto &clause : cnf.clauses) {
      uint64_t clause_mask = 0;
      for (progsat::Lit l : clause) {
        int v = l.var();
        uint64_t m;
        if (v < 6) m = low_pattern[v];
        else m = ((w >> (v - 6)) & 1) ? ~uint64_t{0} : 0;
        if (l.sign()) m = ~m;
        clause_mask |= m;
        if (clause_mask == ~uint64_t{0}) break;
      }
      word_ok &= clause_mask;
      if (word_ok == 0) break;
    }
    if (word_ok != 0) return true;
  }
  return false;
}

inline progsat::Cnf random_3sat(int nvars, int nclauses, uint64_t seed) {
  std::mt19937_64 rng(seed);
  progsat::Cnf cnf;
  cnf.num_vars = nvars;
  for (int i = 0; i < nclauses; i++) {
    std::vector<progsat::Lit> cl;
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < 3) {
      int v = static_cast<int>(rng() % nvars);
      bool dup = false;
      for (int u : vars) dup |= (u == v);
      if (!dup) vars.push_back(v);
    }
    for (int v : vars) cl.push_back(progsat::Lit(v, rng() & 1));
    cnf.add_clause(cl);
  }
  return cnf;
}

// holes+1 pigeons into `holes` holes; unsatisfiable for holes >= 1.
inline progsat::Cnf pigeonhole(int holes) {
  progsat::Cnf cnf;
  int pigeons = holes + 1;
  cnf.num_vars = pigeons * holes;
  auto var = [&](int p, int h) { return progsat::Lit(p * holes + h, false); };
  for (int p = 0; p < pigeons; p++) {
    std::vector<progsat::Lit> cl;
    for (int h = 0; h < holes; h++) cl.push_back(var(p, h));
    cnf.add_clause(cl);
  }
  for (int h = 0; h < holes; h++)
    for (int p = 0; p < pigeons; p++)
      for (int q = p + 1; q < pigeons; q++)
        cnf.add_clause({~var(p, h), ~var(q, h)});
  return cnf;
}

// A pair of random gate circuits over the same inputs, encoded with Tseitin
// clauses, with a miter forcing their outputs to differ. If the second copy
// is the commuted clone of the first, the instance is unsatisfiable.
inline progsat::Cnf gate_miter(int inputs, int gates, uint64_t seed,
                               bool clone_second) {
  std::mt19937_64 rng(seed);
  progsat::Cnf cnf;
  using progsat::Lit;

  int next = inputs;
  struct Gate {
    int kind; // 0 and, 1 or, 2 xor
    int a, b;
  };
  std::vector<Gate> plan;
  for (int g = 0; g < gates; g++) {
    int limit = inputs + g;
    plan.push_back({static_cast<int>(rng() % 3),
                    static_cast<int>(rng() % limit),
                    static_cast<int>(rng() % limit)});
  }

  auto encode = [&](const std::vector<Gate> &gs, bool commute) {
    std::vector<int> signal(inputs);
    for (int i = 0; i < inputs; i++) signal[i] = i;
    for (const Gate &g : gs) {
      int out = next++;
      int a = commute ? g.b : g.a;
      int b = commute ? g.a : g.b;
      Lit la(signal[a], false), lb(signal[b], false), lo(out, false);
      switch (g.kind) {
      case 0: // out <-> a & b
        cnf.add_clause({~lo, la});
        cnf.add_clause({~lo, lb});
        cnf.add_clause({lo, ~la, ~lb});
        break;
      case 1: // out <-> a | b
        cnf.add_clause({lo, ~la});
        cnf.add_clause({lo, ~lb});
        cnf.add_clause({~lo, la, lb});
        break;
      default: // out <-> a ^ b
        cnf.add_clause({~lo, la, lb});
        cnf.add_clause({~lo, ~la, ~lb});
        cnf.add_clause({lo, ~la, lb});
        cnf.add_clause({lo, la, ~lb});
      }
      signal.push_back(out);
    }
    return signal.back();
  };

  int out1 = encode(plan, false);
  std::vector<Gate> second = plan;
  if (!clone_second)
    for (auto &g : second) g.kind = static_cast<int>(rng() % 3);
  int out2 = encode(second, !clone_second ? false : true);

  // Force the outputs to differ.
  cnf.add_clause({Lit(out1, false), Lit(out2, false)});
  cnf.add_clause({Lit(out1, true), Lit(out2, true)});
  cnf.num_vars = next;
  return cnf;
}

} // namespace testutil
