#pragma once

#include "progsat/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace progsat {

// A CNF formula over 1-based DIMACS variables, stored with internal literals.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<Lit>> clauses;

  void add_clause(std::vector<Lit> lits) { clauses.push_back(std::move(lits)); }
};

// Strict DIMACS reader: comments, one `p cnf V C` header, 0-terminated
// clauses. Errors carry the offending line number.
Cnf parse_dimacs(std::istream &in);
Cnf parse_dimacs(const std::string &text);

void write_dimacs(std::ostream &out, const Cnf &cnf,
                  const std::vector<std::string> &comments = {});

// True when every clause has at least one literal set true by the model.
bool model_satisfies(const Cnf &cnf, const std::vector<lbool> &model);

} // namespace progsat
