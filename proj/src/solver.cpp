#include "progsat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <unordered_map>

namespace progsat {

const char *to_string(Result r) {
  switch (r) {
  case Result::Sat: return "SAT";
  case Result::Unsat: return "UNSAT";
  default: return "INDETERMINATE";
  }
}

// --- AssignmentView ---------------------------------------------------------

lbool AssignmentView::value_of(int dimacs_var) const {
  return solver_.assigns_[dimacs_var - 1];
}
int AssignmentView::level_of(int dimacs_var) const {
  return solver_.vardata_[dimacs_var - 1].level;
}
int AssignmentView::num_vars() const { return solver_.num_vars(); }
bool AssignmentView::all_assigned() const { return solver_.all_assigned(); }
const VarMap *AssignmentView::var_map() const { return solver_.var_map_.get(); }
size_t AssignmentView::trail_size() const { return solver_.trail_.size(); }
int AssignmentView::trail_lit(size_t index) const {
  return solver_.trail_[index].to_dimacs();
}

// --- construction -----------------------------------------------------------

Solver::Solver(const Cnf &cnf, SolverConfig config) : config_(config) {
  load(cnf);
}

void Solver::ensure_vars(int nvars) {
  int old = num_vars();
  if (nvars <= old) return;
  assigns_.resize(nvars, lbool::Undef);
  vardata_.resize(nvars);
  polarity_.resize(nvars, 0);
  seen_.resize(nvars, 0);
  activity_.resize(nvars, 0.0);
  watches_.resize(2 * static_cast<size_t>(nvars));
  order_.grow(nvars);
  for (Var v = old; v < nvars; v++) order_.insert(v, activity_);
}

void Solver::load(const Cnf &cnf) {
  ensure_vars(cnf.num_vars);
  for (const auto &cl : cnf.clauses)
    if (!add_clause(cl)) return;
}

bool Solver::add_clause(std::span<const Lit> in) {
  assert(decision_level() == 0);
  if (!ok_) return false;

  std::vector<Lit> lits(in.begin(), in.end());
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());

  // Tautologies and literals already decided at level 0.
  std::vector<Lit> kept;
  for (size_t i = 0; i < lits.size(); i++) {
    if (i + 1 < lits.size() && lits[i + 1] == ~lits[i]) return true;
    if (i > 0 && lits[i] == ~lits[i - 1]) return true;
    lbool v = value(lits[i]);
    if (v == lbool::True && level(lits[i].var()) == 0) return true;
    if (v == lbool::False && level(lits[i].var()) == 0) continue;
    kept.push_back(lits[i]);
  }

  if (kept.empty()) {
    ok_ = false;
    return false;
  }
  if (kept.size() == 1) {
    if (value(kept[0]) == lbool::Undef) {
      unchecked_enqueue(kept[0], cref_undef);
      return true;
    }
    if (value(kept[0]) == lbool::False) ok_ = false;
    return ok_;
  }
  CRef cr = arena_.alloc(kept, false, false);
  problem_clauses_.push_back(cr);
  attach(cr);
  return true;
}

bool Solver::add_clause_dimacs(const std::vector<int> &lits) {
  std::vector<Lit> conv;
  conv.reserve(lits.size());
  int maxv = 0;
  for (int l : lits) maxv = std::max(maxv, std::abs(l));
  ensure_vars(maxv);
  for (int l : lits) conv.push_back(Lit::from_dimacs(l));
  return add_clause(conv);
}

void Solver::register_extension(std::shared_ptr<Extension> ext) {
  if (solving_started_)
    throw std::logic_error("extension '" + ext->name() +
                           "' registered after solving started");
  extensions_.push_back(std::move(ext));
  extension_call_counts_.push_back(0);
}

// --- trail ------------------------------------------------------------------

void Solver::unchecked_enqueue(Lit p, CRef from) {
  assert(value(p) == lbool::Undef);
  assigns_[p.var()] = lbool_from(!p.sign());
  vardata_[p.var()] = {from, decision_level()};
  trail_.push_back(p);
}

void Solver::cancel_until(int lvl) {
  if (decision_level() <= lvl) return;
  for (const auto &ext : extensions_)
    ext->notify_backtrack(lvl, static_cast<size_t>(trail_lim_[lvl]));
  for (int c = static_cast<int>(trail_.size()) - 1; c >= trail_lim_[lvl]; c--) {
    Var v = trail_[c].var();
    polarity_[v] = (assigns_[v] == lbool::True) ? 1 : 0;
    assigns_[v] = lbool::Undef;
    vardata_[v].reason = cref_undef;
    order_.insert(v, activity_);
  }
  qhead_ = trail_lim_[lvl];
  trail_.resize(trail_lim_[lvl]);
  trail_lim_.resize(lvl);
}

// --- watches ----------------------------------------------------------------

void Solver::attach(CRef cr) {
  Clause c = arena_[cr];
  assert(c.size() >= 2);
  watches_[c[0].index()].push_back({cr, c[1]});
  watches_[c[1].index()].push_back({cr, c[0]});
}

// Orders literals so the two watched slots hold the literals that will be
// unassigned the longest: unassigned first, then by descending level.
void Solver::attach_watch_sorted(CRef cr) {
  Clause c = arena_[cr];
  auto rank = [&](Lit l) {
    return value(l) == lbool::Undef ? INT32_MAX : level(l.var());
  };
  int n = c.size();
  for (int slot = 0; slot < 2; slot++) {
    int best = slot;
    for (int i = slot + 1; i < n; i++)
      if (rank(c[i]) > rank(c[best])) best = i;
    std::swap(c[slot], c[best]);
  }
  attach(cr);
}

// --- propagation ------------------------------------------------------------

CRef Solver::propagate_units() {
  CRef confl = cref_undef;
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];
    stats_.propagations++;
    std::vector<Watcher> &ws = watches_[(~p).index()];
    size_t i = 0, j = 0;
    const size_t n0 = ws.size();
    while (i < n0) {
      Watcher w = ws[i];
      if (value(w.blocker) == lbool::True) {
        ws[j++] = ws[i++];
        continue;
      }
      Clause c = arena_[w.cref];
      Lit false_lit = ~p;
      if (c[0] == false_lit) {
        c[0] = c[1];
        c[1] = false_lit;
      }
      assert(c[1] == false_lit);
      i++;
      Lit first = c[0];
      if (first != w.blocker && value(first) == lbool::True) {
        ws[j++] = {w.cref, first};
        continue;
      }
      bool found = false;
      for (int k = 2; k < c.size(); k++) {
        if (value(c[k]) != lbool::False) {
          c[1] = c[k];
          c[k] = false_lit;
          watches_[c[1].index()].push_back({w.cref, first});
          found = true;
          break;
        }
      }
      if (found) continue;
      ws[j++] = {w.cref, first};
      if (value(first) == lbool::False) {
        confl = w.cref;
        qhead_ = trail_.size();
        while (i < n0) ws[j++] = ws[i++];
      } else {
        unchecked_enqueue(first, w.cref);
      }
    }
    ws.resize(j);
    if (confl != cref_undef) break;
  }
  return confl;
}

CRef Solver::propagate_all() {
  while (true) {
    CRef confl = propagate_units();
    if (confl != cref_undef || !ok_) return confl;
    if (extensions_.empty()) return cref_undef;

    fixpoint_counter_++;
    bool run_hooks = config_.hook_period <= 1 ||
                     fixpoint_counter_ % config_.hook_period == 0 ||
                     all_assigned();
    if (!run_hooks) return cref_undef;

    AssignmentView view(*this);
    std::vector<ExtClause> batch;

    // Programmatic propagation: extensions are polled in registration
    // order; the pass stops at the first one that produces clauses, then
    // unit propagation reruns over the new reason clauses.
    bool added = false;
    for (size_t e = 0; e < extensions_.size(); e++) {
      batch.clear();
      extension_call_counts_[e]++;
      extensions_[e]->propagate(view, batch);
      if (batch.empty()) continue;
      auto out = integrate_extension_clauses(e, batch, false);
      if (!ok_) return cref_undef;
      if (out.conflict != cref_undef) {
        stats_.programmatic_conflicts++;
        return out.conflict;
      }
      if (out.added) {
        added = true;
        break;
      }
    }
    if (added) continue;

    // Programmatic conflict analysis at the propagation fixpoint.
    bool check_added = false;
    for (size_t e = 0; e < extensions_.size(); e++) {
      batch.clear();
      extension_call_counts_[e]++;
      extensions_[e]->check(view, batch);
      if (batch.empty()) continue;
      auto out = integrate_extension_clauses(e, batch, true);
      if (!ok_) return cref_undef;
      if (out.conflict != cref_undef) {
        stats_.programmatic_conflicts++;
        return out.conflict;
      }
      if (out.added) {
        check_added = true;
        break;
      }
    }
    if (check_added) continue;
    return cref_undef;
  }
}

std::vector<Lit> Solver::normalize_ext_clause(size_t ext_idx,
                                              const ExtClause &raw,
                                              bool from_check,
                                              bool &tautology) {
  const std::string &who = extensions_[ext_idx]->name();
  std::vector<Lit> lits;
  lits.reserve(raw.size());
  for (int dl : raw) {
    if (dl == 0 || std::abs(dl) > num_vars())
      throw ContractViolation(who, "clause literal " + std::to_string(dl) +
                                       " out of range");
    lits.push_back(Lit::from_dimacs(dl));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  tautology = false;
  for (size_t i = 0; i + 1 < lits.size(); i++)
    if (lits[i + 1] == ~lits[i]) tautology = true;
  if (tautology)
    throw ContractViolation(who, std::string("tautological ") +
                                     (from_check ? "conflict" : "reason") +
                                     " clause returned");
  return lits;
}

Solver::ExtBatchOutcome Solver::integrate_extension_clauses(
    size_t ext_idx, const std::vector<ExtClause> &batch, bool from_check) {
  const std::string &who = extensions_[ext_idx]->name();

  // Contract validation against the assignment the hook saw.
  std::vector<std::vector<Lit>> normalized;
  normalized.reserve(batch.size());
  for (const auto &raw : batch) {
    bool taut = false;
    auto lits = normalize_ext_clause(ext_idx, raw, from_check, taut);
    int n_true = 0, n_undef = 0;
    for (Lit l : lits) {
      lbool v = value(l);
      if (v == lbool::True) n_true++;
      else if (v == lbool::Undef) n_undef++;
    }
    if (from_check) {
      if (n_true > 0 || n_undef > 0)
        throw ContractViolation(who,
                                "conflict clause is not falsified under the "
                                "current assignment");
    } else {
      if (n_true > 0 || n_undef > 1)
        throw ContractViolation(
            who, "reason clause antecedent literal not true under the "
                 "current assignment");
    }
    normalized.push_back(std::move(lits));
  }

  // Integration. A clause may re-classify while earlier batch entries take
  // effect, so each is handled by its state at insertion time.
  ExtBatchOutcome out;
  for (auto &lits : normalized) {
    if (lits.empty()) {
      ok_ = false;
      return out;
    }
    if (lits.size() == 1) {
      Lit u = lits[0];
      if (value(u) == lbool::True && level(u.var()) == 0) continue;
      if (value(u) == lbool::False && level(u.var()) == 0) {
        ok_ = false;
        return out;
      }
      // A unit from an extension is a global fact: assert it at level 0.
      cancel_until(0);
      if (value(u) == lbool::Undef) unchecked_enqueue(u, cref_undef);
      else if (value(u) == lbool::False) {
        ok_ = false;
        return out;
      }
      out.added = true;
      if (!from_check) stats_.reason_clauses_added++;
      continue;
    }

    CRef cr = arena_.alloc(lits, false, true);
    Clause c = arena_[cr];
    uint32_t lbd = 1;
    {
      std::vector<int> levels;
      for (Lit l : lits)
        if (value(l) != lbool::Undef) levels.push_back(level(l.var()));
      std::sort(levels.begin(), levels.end());
      lbd = static_cast<uint32_t>(
          std::unique(levels.begin(), levels.end()) - levels.begin());
      if (lbd == 0) lbd = 1;
    }
    c.set_lbd(lbd);
    c.set_activity(static_cast<float>(cla_inc_));
    learnt_clauses_.push_back(cr);
    attach_watch_sorted(cr);
    if (!from_check) stats_.reason_clauses_added++;
    out.added = true;

    int n_true = 0, n_undef = 0;
    for (Lit l : c) {
      lbool v = value(l);
      if (v == lbool::True) n_true++;
      else if (v == lbool::Undef) n_undef++;
    }
    if (n_true == 0 && n_undef == 0) {
      if (out.conflict == cref_undef) out.conflict = cr;
    } else if (n_true == 0 && n_undef == 1) {
      assert(value(c[0]) == lbool::Undef);
      unchecked_enqueue(c[0], cr);
    }
  }
  return out;
}

// --- conflict analysis ------------------------------------------------------

int Solver::max_level_in(CRef cr) const {
  const Clause c = arena_[cr];
  int ml = 0;
  for (Lit l : c) ml = std::max(ml, level(l.var()));
  return ml;
}

void Solver::analyze(CRef confl, std::vector<Lit> &out_learnt, int &out_btlevel,
                     uint32_t &out_lbd) {
  int path_count = 0;
  Lit p;
  bool p_set = false;
  out_learnt.push_back(Lit(0, false)); // slot for the asserting literal
  int index = static_cast<int>(trail_.size()) - 1;
  CRef cr = confl;

  do {
    assert(cr != cref_undef);
    Clause c = arena_[cr];
    if (c.learnt() || c.from_extension()) clause_bump(c);
    for (int j = p_set ? 1 : 0; j < c.size(); j++) {
      Lit q = c[j];
      if (!seen_[q.var()] && level(q.var()) > 0) {
        var_bump(q.var());
        seen_[q.var()] = 1;
        if (level(q.var()) >= decision_level()) path_count++;
        else out_learnt.push_back(q);
      }
    }
    while (!seen_[trail_[index--].var()])
      ;
    p = trail_[index + 1];
    p_set = true;
    cr = reason(p.var());
    seen_[p.var()] = 0;
    path_count--;
  } while (path_count > 0);
  out_learnt[0] = ~p;

  // Recursive self-subsumption over the implication graph.
  analyze_toclear_.assign(out_learnt.begin(), out_learnt.end());
  uint32_t abstract_levels = 0;
  for (size_t i = 1; i < out_learnt.size(); i++)
    abstract_levels |= 1u << (level(out_learnt[i].var()) & 31);
  size_t i, j;
  for (i = j = 1; i < out_learnt.size(); i++)
    if (reason(out_learnt[i].var()) == cref_undef ||
        !lit_redundant(out_learnt[i], abstract_levels))
      out_learnt[j++] = out_learnt[i];
  out_learnt.resize(j);

  if (out_learnt.size() == 1) {
    out_btlevel = 0;
  } else {
    size_t max_i = 1;
    for (size_t k = 2; k < out_learnt.size(); k++)
      if (level(out_learnt[k].var()) > level(out_learnt[max_i].var()))
        max_i = k;
    std::swap(out_learnt[1], out_learnt[max_i]);
    out_btlevel = level(out_learnt[1].var());
  }

  {
    std::vector<int> levels;
    for (Lit l : out_learnt) levels.push_back(level(l.var()));
    std::sort(levels.begin(), levels.end());
    out_lbd = static_cast<uint32_t>(
        std::unique(levels.begin(), levels.end()) - levels.begin());
  }

  for (Lit l : analyze_toclear_) seen_[l.var()] = 0;
}

bool Solver::lit_redundant(Lit p, uint32_t abstract_levels) {
  analyze_stack_.clear();
  analyze_stack_.push_back(p);
  size_t top = analyze_toclear_.size();
  while (!analyze_stack_.empty()) {
    Lit q = analyze_stack_.back();
    analyze_stack_.pop_back();
    assert(reason(q.var()) != cref_undef);
    Clause c = arena_[reason(q.var())];
    for (int i = 1; i < c.size(); i++) {
      Lit l = c[i];
      if (!seen_[l.var()] && level(l.var()) > 0) {
        if (reason(l.var()) != cref_undef &&
            ((1u << (level(l.var()) & 31)) & abstract_levels)) {
          seen_[l.var()] = 1;
          analyze_stack_.push_back(l);
          analyze_toclear_.push_back(l);
        } else {
          for (size_t k = top; k < analyze_toclear_.size(); k++)
            seen_[analyze_toclear_[k].var()] = 0;
          analyze_toclear_.resize(top);
          return false;
        }
      }
    }
  }
  return true;
}

// --- heuristics -------------------------------------------------------------

void Solver::var_bump(Var v) {
  activity_[v] += var_inc_;
  if (activity_[v] > config_.var_rescale) {
    for (double &a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  order_.increased(v, activity_);
}

void Solver::var_decay_all() { var_inc_ *= 1.0 / config_.var_decay; }

void Solver::clause_bump(Clause c) {
  c.set_activity(c.activity() + static_cast<float>(cla_inc_));
  if (c.activity() > 1e20f) {
    for (CRef cr : learnt_clauses_) {
      Clause lc = arena_[cr];
      lc.set_activity(lc.activity() * 1e-20f);
    }
    cla_inc_ *= 1e-20;
  }
}

void Solver::clause_decay_all() { cla_inc_ *= 1.0 / config_.clause_decay; }

Lit Solver::pick_branch() {
  Var v = var_undef;
  while (v == var_undef || value(v) != lbool::Undef) {
    assert(!order_.empty());
    v = order_.pop(activity_);
  }
  return Lit(v, polarity_[v] == 0);
}

// --- clause deletion --------------------------------------------------------

bool Solver::locked(CRef cr) const {
  const Clause c = arena_[cr];
  return value(c[0]) == lbool::True && reason(c[0].var()) == cr;
}

std::vector<int> Solver::select_deletions(const std::vector<ClauseScore> &scores) {
  std::vector<int> cand;
  for (int i = 0; i < static_cast<int>(scores.size()); i++)
    if (scores[i].deletable) cand.push_back(i);
  // Worst first: high LBD, then low activity, then insertion order.
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    if (scores[a].lbd != scores[b].lbd) return scores[a].lbd > scores[b].lbd;
    if (scores[a].activity != scores[b].activity)
      return scores[a].activity < scores[b].activity;
    return a < b;
  });
  cand.resize(cand.size() / 2);
  return cand;
}

void Solver::reduce_db() {
  std::vector<ClauseScore> scores;
  scores.reserve(learnt_clauses_.size());
  for (CRef cr : learnt_clauses_) {
    const Clause c = arena_[cr];
    scores.push_back(
        {c.lbd(), c.activity(), c.size() > 2 && c.lbd() > 2 && !locked(cr)});
  }
  std::vector<int> victims = select_deletions(scores);
  if (victims.empty()) {
    reduce_limit_ += config_.reduce_increment;
    return;
  }
  std::vector<char> dead(learnt_clauses_.size(), 0);
  for (int i : victims) dead[i] = 1;

  // Problem clauses occupy the arena prefix and never move; only the
  // learnt tail is compacted.
  ClauseArena tail;
  std::unordered_map<CRef, CRef> remap;
  remap.reserve(learnt_clauses_.size());
  std::vector<CRef> surviving;
  surviving.reserve(learnt_clauses_.size() - victims.size());
  for (size_t i = 0; i < learnt_clauses_.size(); i++) {
    if (dead[i]) continue;
    CRef cr = learnt_clauses_[i];
    const Clause c = arena_[cr];
    std::vector<Lit> lits(c.begin(), c.end());
    CRef nr = static_cast<CRef>(problem_arena_end_) +
              tail.alloc(lits, c.learnt(), c.from_extension());
    Clause nc = tail[nr - static_cast<CRef>(problem_arena_end_)];
    nc.set_lbd(c.lbd());
    nc.set_activity(c.activity());
    remap[cr] = nr;
    surviving.push_back(nr);
  }

  arena_.truncate(problem_arena_end_);
  arena_.append(tail);

  for (auto &vd : vardata_)
    if (vd.reason != cref_undef && vd.reason >= problem_arena_end_) {
      auto it = remap.find(vd.reason);
      assert(it != remap.end());
      vd.reason = it->second;
    }

  for (auto &ws : watches_) {
    size_t j = 0;
    for (size_t i = 0; i < ws.size(); i++) {
      CRef cr = ws[i].cref;
      if (cr < problem_arena_end_) {
        ws[j++] = ws[i];
        continue;
      }
      auto it = remap.find(cr);
      if (it == remap.end()) continue; // deleted clause
      ws[j++] = {it->second, ws[i].blocker};
    }
    ws.resize(j);
  }

  learnt_clauses_ = std::move(surviving);
  stats_.deleted_clauses += victims.size();
  reduce_limit_ += config_.reduce_increment;
}

// --- search -----------------------------------------------------------------

namespace {
double luby(double y, int x) {
  int size, seq;
  for (size = 1, seq = 0; size < x + 1; seq++, size = 2 * size + 1)
    ;
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    seq--;
    x = x % size;
  }
  return std::pow(y, seq);
}
} // namespace

bool Solver::within_budget() const {
  if (budget_.max_seconds <= 0.0) return true;
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start_time_)
                     .count();
  return elapsed < budget_.max_seconds;
}

void Solver::check_model_or_throw() const {
  for (CRef cr : problem_clauses_) {
    const Clause c = arena_[cr];
    bool sat = false;
    for (Lit l : c)
      if (value(l) == lbool::True) {
        sat = true;
        break;
      }
    if (!sat) throw std::logic_error("internal model verification failed");
  }
}

Result Solver::finish(Result r) {
  for (size_t e = 0; e < extensions_.size(); e++)
    stats_.extension_calls[extensions_[e]->name()] = extension_call_counts_[e];
  return r;
}

Result Solver::solve(std::span<const Lit> assumptions) {
  for (Lit l : assumptions) {
    std::vector<Lit> unit{l};
    if (!add_clause(unit)) break;
  }
  return solve();
}

Result Solver::solve() {
  if (!solving_started_) problem_arena_end_ = arena_.size_words();
  solving_started_ = true;
  model_.clear();
  if (!ok_) return finish(Result::Unsat);
  start_time_ = std::chrono::steady_clock::now();
  reduce_limit_ = config_.reduce_first;

  uint64_t restart_threshold =
      static_cast<uint64_t>(config_.restart_base * luby(2.0, 0));
  uint64_t conflicts_this_restart = 0;

  std::vector<Lit> learnt;
  int bt_level;
  uint32_t lbd;

  while (true) {
    CRef confl = propagate_all();
    if (!ok_) return finish(Result::Unsat);

    if (confl != cref_undef) {
      stats_.conflicts++;
      conflicts_this_restart++;

      int ml = max_level_in(confl);
      if (ml == 0) {
        ok_ = false;
        return finish(Result::Unsat);
      }
      if (ml < decision_level()) cancel_until(ml);

      learnt.clear();
      analyze(confl, learnt, bt_level, lbd);
      if (learnt_listener_) {
        std::vector<int> dimacs;
        for (Lit l : learnt) dimacs.push_back(l.to_dimacs());
        learnt_listener_(dimacs, bt_level);
      }
      cancel_until(bt_level);
      if (learnt.size() == 1) {
        unchecked_enqueue(learnt[0], cref_undef);
      } else {
        CRef cr = arena_.alloc(learnt, true, false);
        Clause c = arena_[cr];
        c.set_lbd(lbd);
        c.set_activity(static_cast<float>(cla_inc_));
        learnt_clauses_.push_back(cr);
        attach(cr);
        unchecked_enqueue(learnt[0], cr);
      }
      stats_.learnt_clauses++;
      var_decay_all();
      clause_decay_all();

      if (config_.clause_deletion && learnt_clauses_.size() >= reduce_limit_)
        reduce_db();

      if (stats_.conflicts >= budget_.max_conflicts)
        return finish(Result::Indeterminate);
      if ((stats_.conflicts & 0x3FF) == 0 && !within_budget())
        return finish(Result::Indeterminate);
    } else {
      if (!within_budget()) return finish(Result::Indeterminate);

      if (conflicts_this_restart >= restart_threshold) {
        stats_.restarts++;
        conflicts_this_restart = 0;
        restart_threshold = static_cast<uint64_t>(
            config_.restart_base *
            luby(2.0, static_cast<int>(stats_.restarts)));
        cancel_until(0);
        continue;
      }

      if (all_assigned()) {
        check_model_or_throw();
        model_.assign(assigns_.begin(), assigns_.end());
        cancel_until(0);
        return finish(Result::Sat);
      }

      Lit next = pick_branch();
      stats_.decisions++;
      if (decision_listener_) decision_listener_(next.to_dimacs());
      new_decision_level();
      unchecked_enqueue(next, cref_undef);
    }
  }
}

// --- probing and snapshots --------------------------------------------------

Solver::ProbeResult Solver::probe(std::span<const int> dimacs_lits) {
  ProbeResult r;
  assert(decision_level() == 0);
  if (!solving_started_) problem_arena_end_ = arena_.size_words();
  solving_started_ = true;
  start_time_ = std::chrono::steady_clock::now();
  if (!ok_) {
    r.conflict = true;
    r.values = assigns_;
    return r;
  }
  CRef confl = propagate_all();
  if (confl != cref_undef || !ok_) {
    r.conflict = true;
    r.values = assigns_;
    return r;
  }
  new_decision_level();
  for (int dl : dimacs_lits) {
    Lit p = Lit::from_dimacs(dl);
    if (value(p) == lbool::False) {
      r.conflict = true;
      break;
    }
    if (value(p) == lbool::Undef) unchecked_enqueue(p, cref_undef);
  }
  if (!r.conflict) {
    confl = propagate_all();
    r.conflict = (confl != cref_undef) || !ok_;
  }
  r.values = assigns_;
  cancel_until(0);
  finish(Result::Indeterminate);
  return r;
}

std::vector<std::vector<int>> Solver::clause_db_snapshot() const {
  std::vector<std::vector<int>> db;
  auto emit = [&](CRef cr) {
    const Clause c = arena_[cr];
    std::vector<int> lits;
    for (Lit l : c) lits.push_back(l.to_dimacs());
    db.push_back(std::move(lits));
  };
  for (CRef cr : problem_clauses_) emit(cr);
  for (CRef cr : learnt_clauses_) emit(cr);
  int level0_end = trail_lim_.empty() ? static_cast<int>(trail_.size())
                                      : trail_lim_[0];
  for (int i = 0; i < level0_end; i++)
    db.push_back({trail_[i].to_dimacs()});
  return db;
}

} // namespace progsat
