#pragma once

#include "progsat/types.hpp"

#include <string>
#include <vector>

namespace progsat {

class Solver;
class VarMap;

// Read-only window onto the solver's current partial assignment.
// Variables are addressed by their 1-based DIMACS id.
class AssignmentView {
public:
  AssignmentView(const Solver &solver) : solver_(solver) {}

  lbool value_of(int dimacs_var) const;
  int level_of(int dimacs_var) const;
  int num_vars() const;
  bool all_assigned() const;

  // Assignment trail access, for extensions that track deltas.
  size_t trail_size() const;
  int trail_lit(size_t index) const; // DIMACS literal at trail position

  // Variable map supplied by the instance generator; may be null.
  const VarMap *var_map() const;

private:
  const Solver &solver_;
};

// A clause handed back by an extension, in DIMACS literals.
using ExtClause = std::vector<int>;

// User hooks wired into the solver's propagation loop. propagate() may
// return reason clauses (alpha -> L with alpha true and L unassigned);
// check() may return clauses falsified under the current assignment.
class Extension {
public:
  virtual ~Extension() = default;
  virtual const std::string &name() const = 0;
  virtual void propagate(const AssignmentView &view,
                         std::vector<ExtClause> &out) {
    (void)view;
    (void)out;
  }
  virtual void check(const AssignmentView &view, std::vector<ExtClause> &out) {
    (void)view;
    (void)out;
  }
  // Called whenever the solver undoes assignments down to the given
  // decision level; trail_size is the assignment count that survives.
  // Lets stateful extensions invalidate caches cheaply.
  virtual void notify_backtrack(int level, size_t trail_size) {
    (void)level;
    (void)trail_size;
  }
};

} // namespace progsat
