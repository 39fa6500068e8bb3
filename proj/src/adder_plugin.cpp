#include "progsat/adder_plugin.hpp"

#include <cassert>

namespace progsat {

namespace {

inline lbool bit_value(const AssignmentView &view, Bit b) {
  if (b.is_const()) return lbool_from(b.const_value());
  lbool v = view.value_of(b.var_id());
  return v ^ b.negated();
}

inline int bit_level(const AssignmentView &view, Bit b) {
  return b.is_const() ? 0 : view.level_of(b.var_id());
}

inline int bit_lit(Bit b, bool value) {
  int d = b.dimacs();
  return value ? d : -d;
}

} // namespace

AdderPropagator::AdderPropagator(std::vector<AdderGroup> groups,
                                 std::string name)
    : name_(std::move(name)), groups_(std::move(groups)),
      states_(groups_.size()) {}

void AdderPropagator::notify_backtrack(int level) {
  if (pending_invalidate_ < 0 || level < pending_invalidate_)
    pending_invalidate_ = level;
}

void AdderPropagator::propagate(const AssignmentView &view,
                                std::vector<ExtClause> &out) {
  for (size_t gi = 0; gi < groups_.size(); gi++) {
    const AdderGroup &g = groups_[gi];
    GroupState &st = states_[gi];
    int width = g.width();

    if (pending_invalidate_ >= 0) {
      if (st.max_level > pending_invalidate_) st = GroupState{};
      else if (st.emitted_below > 0) {
        // Output bits may sit above the operand prefix's levels; drop the
        // output watermark unless it provably survived the backtrack.
        st.emitted_below = 0;
      }
    }

    // Extend the fully-assigned operand prefix.
    while (st.prefix < width) {
      bool all_set = true;
      uint64_t col = 0;
      int lvl = st.max_level;
      for (const auto &op : g.operands) {
        Bit b = op[st.prefix];
        lbool v = bit_value(view, b);
        if (v == lbool::Undef) {
          all_set = false;
          break;
        }
        if (v == lbool::True) col++;
        int l = bit_level(view, b);
        if (l > lvl) lvl = l;
      }
      if (!all_set) break;
      st.sum += col << st.prefix;
      st.max_level = lvl;
      st.prefix++;
    }

    // Emit reasons for forced but unassigned outputs below the prefix.
    for (int j = st.emitted_below; j < st.prefix; j++) {
      Bit ob = g.output[j];
      bool forced = (st.sum >> j) & 1;
      if (ob.is_const()) {
        assert(ob.const_value() == forced);
        if (j == st.emitted_below) st.emitted_below = j + 1;
        continue;
      }
      lbool v = bit_value(view, ob);
      if (v != lbool::Undef) {
        if (j == st.emitted_below) st.emitted_below = j + 1;
        continue;
      }

      ExtClause clause;
      for (int p = 0; p <= j; p++)
        for (const auto &op : g.operands) {
          Bit b = op[p];
          if (b.is_const()) continue;
          bool val = bit_value(view, b) == lbool::True;
          clause.push_back(-bit_lit(b, val));
        }
      clause.push_back(bit_lit(ob, forced));
      out.push_back(std::move(clause));
      emissions_++;
    }
  }
  pending_invalidate_ = -1;
}

} // namespace progsat
