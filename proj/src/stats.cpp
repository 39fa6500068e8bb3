#include "progsat/stats.hpp"

#include <sstream>

namespace progsat {

std::string SolveStats::to_key_value() const {
  std::ostringstream out;
  out << "conflicts=" << conflicts << "\n"
      << "decisions=" << decisions << "\n"
      << "propagations=" << propagations << "\n"
      << "restarts=" << restarts << "\n"
      << "learnt_clauses=" << learnt_clauses << "\n"
      << "deleted_clauses=" << deleted_clauses << "\n"
      << "reason_clauses_added=" << reason_clauses_added << "\n"
      << "programmatic_conflicts=" << programmatic_conflicts << "\n";
  for (const auto &[name, count] : extension_calls)
    out << "extension_calls." << name << "=" << count << "\n";
  return out.str();
}

} // namespace progsat
