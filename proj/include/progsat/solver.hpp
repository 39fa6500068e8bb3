#pragma once

#include "progsat/clause.hpp"
#include "progsat/cnf.hpp"
#include "progsat/extension.hpp"
#include "progsat/heap.hpp"
#include "progsat/stats.hpp"
#include "progsat/types.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace progsat {

struct SolverConfig {
  double var_decay = 0.95;
  double var_bump = 1.0;
  double var_rescale = 1e100;
  double clause_decay = 0.999;
  int restart_base = 100;   // Luby unit, in conflicts
  int reduce_first = 2000;  // learnt clauses alive before first reduction
  int reduce_increment = 300;
  int hook_period = 1;      // run extension hooks every k-th fixpoint
  bool clause_deletion = true;
};

struct Budget {
  uint64_t max_conflicts = UINT64_MAX;
  double max_seconds = 0.0; // 0 = unlimited
};

enum class Result { Sat, Unsat, Indeterminate };

const char *to_string(Result r);

// CDCL solver: two-watched-literal propagation, first-UIP learning with
// recursive minimization, VSIDS branching with phase saving, Luby restarts,
// LBD/activity-ranked clause deletion. Extensions hook into the propagation
// loop; their reason clauses live in the clause database alongside learnt
// clauses and follow the same deletion policy.
class Solver {
public:
  Solver() = default;
  explicit Solver(const Cnf &cnf, SolverConfig config = {});

  void load(const Cnf &cnf);

  int num_vars() const { return static_cast<int>(assigns_.size()); }
  void ensure_vars(int nvars);
  // Returns false once the formula is known unsatisfiable at level 0.
  bool add_clause(std::span<const Lit> lits);
  bool add_clause_dimacs(const std::vector<int> &lits);

  void register_extension(std::shared_ptr<Extension> ext);
  void set_var_map(std::shared_ptr<const VarMap> map) { var_map_ = std::move(map); }
  const VarMap *var_map() const { return var_map_.get(); }

  void set_budget(Budget b) { budget_ = b; }
  SolverConfig &config() { return config_; }

  Result solve();
  // Fixed unit assumptions, applied as level-0 facts before search.
  Result solve(std::span<const Lit> assumptions);

  const std::vector<lbool> &model() const { return model_; }
  const SolveStats &stats() const { return stats_; }

  // --- introspection (extensions, tests) ---
  lbool value_dimacs(int dimacs_var) const {
    return assigns_[dimacs_var - 1];
  }
  int level_dimacs(int dimacs_var) const {
    return vardata_[dimacs_var - 1].level;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  bool all_assigned() const {
    return trail_.size() == assigns_.size();
  }

  // Enqueues the given literals on a fresh decision level, runs the full
  // propagation loop and reports the resulting assignment, then undoes
  // everything. Used to study propagation strength in isolation.
  struct ProbeResult {
    bool conflict = false;
    std::vector<lbool> values;
  };
  ProbeResult probe(std::span<const int> dimacs_lits);

  // Test hooks.
  void set_learnt_listener(
      std::function<void(const std::vector<int> &, int)> fn) {
    learnt_listener_ = std::move(fn);
  }
  void set_decision_listener(std::function<void(int)> fn) {
    decision_listener_ = std::move(fn);
  }
  // Every clause currently in the database (problem, learnt, extension,
  // plus level-0 facts as unit clauses), in DIMACS literals.
  std::vector<std::vector<int>> clause_db_snapshot() const;

  // Deletion ranking, exposed as a pure function: given (lbd, activity,
  // deletable) per clause, returns the indices to delete — the worse-ranked
  // half of the deletable ones.
  struct ClauseScore {
    uint32_t lbd;
    float activity;
    bool deletable;
  };
  static std::vector<int> select_deletions(const std::vector<ClauseScore> &scores);

private:
  struct VarData {
    CRef reason = cref_undef;
    int level = 0;
  };

  // --- assignment ---
  lbool value(Lit l) const { return assigns_[l.var()] ^ l.sign(); }
  lbool value(Var v) const { return assigns_[v]; }
  int level(Var v) const { return vardata_[v].level; }
  CRef reason(Var v) const { return vardata_[v].reason; }
  void unchecked_enqueue(Lit p, CRef from);
  void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }
  void cancel_until(int lvl);

  // --- propagation ---
  CRef propagate_units();
  CRef propagate_all();
  void attach(CRef cr);
  void attach_watch_sorted(CRef cr);

  // --- extensions ---
  struct ExtBatchOutcome {
    bool added = false;
    CRef conflict = cref_undef;
  };
  ExtBatchOutcome integrate_extension_clauses(size_t ext_idx,
                                              const std::vector<ExtClause> &batch,
                                              bool from_check);
  std::vector<Lit> normalize_ext_clause(size_t ext_idx, const ExtClause &raw,
                                        bool from_check, bool &tautology);

  // --- conflict analysis ---
  void analyze(CRef confl, std::vector<Lit> &out_learnt, int &out_btlevel,
               uint32_t &out_lbd);
  bool lit_redundant(Lit p, uint32_t abstract_levels);
  int max_level_in(CRef cr) const;

  // --- heuristics ---
  void var_bump(Var v);
  void var_decay_all();
  void clause_bump(Clause c);
  void clause_decay_all();
  Lit pick_branch();

  // --- clause database ---
  void reduce_db();
  bool locked(CRef cr) const;

  bool within_budget() const;
  void check_model_or_throw() const;
  Result finish(Result r);

  SolverConfig config_;
  Budget budget_;

  ClauseArena arena_;
  std::vector<CRef> problem_clauses_;
  std::vector<CRef> learnt_clauses_; // learnt + extension clauses
  std::vector<std::vector<Watcher>> watches_;

  std::vector<lbool> assigns_;
  std::vector<VarData> vardata_;
  std::vector<char> polarity_; // last assigned value, initially false
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  ActivityHeap order_;

  std::vector<std::shared_ptr<Extension>> extensions_;
  std::vector<uint64_t> extension_call_counts_;
  std::shared_ptr<const VarMap> var_map_;
  uint64_t fixpoint_counter_ = 0;

  bool ok_ = true;
  bool solving_started_ = false;
  size_t problem_arena_end_ = 0;
  std::vector<lbool> model_;
  SolveStats stats_;
  uint64_t reduce_limit_ = 0;
  std::chrono::steady_clock::time_point start_time_;

  std::function<void(const std::vector<int> &, int)> learnt_listener_;
  std::function<void(int)> decision_listener_;

  // analyze scratch
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_toclear_;

  friend class AssignmentView;
};

} // namespace progsat
