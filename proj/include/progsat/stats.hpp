#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace progsat {

struct SolveStats {
  uint64_t conflicts = 0;
  uint64_t decisions = 0;
  uint64_t propagations = 0;
  uint64_t restarts = 0;
  uint64_t learnt_clauses = 0;
  uint64_t deleted_clauses = 0;
  uint64_t reason_clauses_added = 0;
  uint64_t programmatic_conflicts = 0;
  std::map<std::string, uint64_t> extension_calls;

  // Flat `key=value` block, one entry per line.
  std::string to_key_value() const;
};

} // namespace progsat
