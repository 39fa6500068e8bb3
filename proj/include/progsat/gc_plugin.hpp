#pragma once

#include "progsat/bit.hpp"
#include "progsat/condition.hpp"
#include "progsat/extension.hpp"
#include "progsat/rule_table.hpp"

#include <memory>
#include <vector>

namespace progsat {

// One bit slot of a differential operation: the two copies' circuit bits
// and the difference variable tying them together (0 when untracked).
struct GcTriple {
  Bit x;
  Bit y;
  int d_var = 0;
};

struct GcEntry {
  GcOp op;
  std::vector<GcTriple> inputs; // arity-many
  GcTriple output;
};

struct GcStructure {
  std::vector<GcEntry> entries;
};

// Multi-valued reasoning over 1-bit XOR-difference instances: reads the
// generalized condition of every operation input off the partial
// assignment, looks the output condition up in the exact image tables, and
//  - propagate: emits reason clauses for every Boolean fact the output
//    condition forces on (y, y', d) that is still unassigned;
//  - check: reports a conflict when the implied output condition and the
//    condition already fixed by assignments have an empty meet.
class GcPlugin : public Extension {
public:
  explicit GcPlugin(GcStructure structure, std::string name = "gc");

  const std::string &name() const override { return name_; }
  void propagate(const AssignmentView &view,
                 std::vector<ExtClause> &out) override;
  void check(const AssignmentView &view, std::vector<ExtClause> &out) override;

  uint64_t emissions() const { return emissions_; }
  uint64_t contradictions() const { return contradictions_; }

private:
  Condition read_condition(const AssignmentView &view, const GcTriple &t,
                           std::vector<int> *antecedent) const;
  const RuleTable &table_for(GcOp op) const;

  std::string name_;
  GcStructure structure_;
  std::shared_ptr<const RuleTable> table_if_, table_maj_, table_xor2_,
      table_xor3_;
  uint64_t emissions_ = 0;
  uint64_t contradictions_ = 0;
};

} // namespace progsat
