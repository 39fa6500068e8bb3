#pragma once

#include "progsat/cnf_builder.hpp"
#include "progsat/extension.hpp"

#include <vector>

namespace progsat {

// Directional-consistency repair for the compact multi-operand adder
// encoding. Watches the least significant bits of every registered
// addition: once all operand bits below some position are assigned, every
// output bit below that position is forced, and any such bit the CNF
// failed to propagate is returned as a reason clause
//   (assigned operand literals up to that position) -> output bit value.
//
// Groups are scanned event-wise: each stalled group places one-shot
// watches on the unassigned operand bits of its stall column and is
// revisited only when one of them gets assigned or a backtrack unwinds
// its prefix.
class AdderPropagator : public Extension {
public:
  explicit AdderPropagator(std::vector<AdderGroup> groups,
                           std::string name = "adder");

  const std::string &name() const override { return name_; }
  void propagate(const AssignmentView &view,
                 std::vector<ExtClause> &out) override;
  void notify_backtrack(int level, size_t trail_size) override;

  uint64_t emissions() const { return emissions_; }

private:
  struct GroupState {
    int prefix = 0;    // positions below this are fully assigned
    uint64_t sum = 0;  // partial sum of the assigned prefix
    int max_level = 0; // deepest decision level feeding the prefix
  };

  void scan_group(const AssignmentView &view, size_t gi,
                  std::vector<ExtClause> &out);

  std::string name_;
  std::vector<AdderGroup> groups_;
  std::vector<GroupState> states_;
  std::vector<char> dirty_;
  std::vector<uint32_t> dirty_list_;
  std::vector<std::vector<uint32_t>> var_watch_; // one-shot, by variable id
  size_t trail_cursor_ = 0;
  int pending_invalidate_ = -1;
  uint64_t emissions_ = 0;
};

} // namespace progsat
