#include "progsat/gc_plugin.hpp"

#include <cassert>

namespace progsat {

namespace {

inline lbool bit_value(const AssignmentView &view, Bit b) {
  if (b.is_const()) return lbool_from(b.const_value());
  return view.value_of(b.var_id()) ^ b.negated();
}

// Literal stating the bit currently holds this value; used negated in
// antecedents.
inline int bit_lit(Bit b, bool value) {
  int d = b.dimacs();
  return value ? d : -d;
}

} // namespace

GcPlugin::GcPlugin(GcStructure structure, std::string name)
    : name_(std::move(name)), structure_(std::move(structure)),
      table_if_(std::make_shared<RuleTable>(
          build_rule_table(GcOp::If, RuleMode::Generalized16))),
      table_maj_(std::make_shared<RuleTable>(
          build_rule_table(GcOp::Maj, RuleMode::Generalized16))),
      table_xor2_(std::make_shared<RuleTable>(
          build_rule_table(GcOp::Xor2, RuleMode::Generalized16))),
      table_xor3_(std::make_shared<RuleTable>(
          build_rule_table(GcOp::Xor3, RuleMode::Generalized16))) {}

const RuleTable &GcPlugin::table_for(GcOp op) const {
  switch (op) {
  case GcOp::If: return *table_if_;
  case GcOp::Maj: return *table_maj_;
  case GcOp::Xor2: return *table_xor2_;
  default: return *table_xor3_;
  }
}

// The meet of the constraints contributed by whichever of (x, x', d) are
// assigned. Antecedent literals are collected when requested.
Condition GcPlugin::read_condition(const AssignmentView &view,
                                   const GcTriple &t,
                                   std::vector<int> *antecedent) const {
  Condition c = cond_unknown;
  auto fold = [&](Bit b, int coord) {
    lbool v = bit_value(view, b);
    if (v == lbool::Undef) return;
    c = c.meet(Condition::from_assignment(coord, v == lbool::True));
    if (!b.is_const() && antecedent)
      antecedent->push_back(bit_lit(b, v == lbool::True));
  };
  fold(t.x, 0);
  fold(t.y, 1);
  if (t.d_var != 0) fold(Bit::var(t.d_var), 2);
  return c;
}

void GcPlugin::propagate(const AssignmentView &view,
                         std::vector<ExtClause> &out) {
  std::vector<int> antecedent;
  for (const GcEntry &e : structure_.entries) {
    antecedent.clear();
    bool informative_inputs = false;
    std::array<Condition, 3> in;
    for (size_t i = 0; i < e.inputs.size(); i++) {
      in[i] = read_condition(view, e.inputs[i], &antecedent);
      assert(!in[i].empty());
      if (!in[i].full()) informative_inputs = true;
    }
    if (!informative_inputs) continue;

    Condition implied =
        table_for(e.op).lookup(std::span(in.data(), e.inputs.size()));
    if (implied.full()) continue;
    assert(!implied.empty());

    auto emit = [&](Bit target, int coord, std::optional<bool> forced) {
      if (!forced) return;
      if (coord == 2 && e.output.d_var == 0) return;
      if (target.is_const()) return;
      if (bit_value(view, target) != lbool::Undef) return;
      ExtClause clause;
      clause.reserve(antecedent.size() + 1);
      for (int lit : antecedent) clause.push_back(-lit);
      clause.push_back(bit_lit(target, *forced));
      out.push_back(std::move(clause));
      emissions_++;
    };

    emit(e.output.x, 0, implied.forced_x());
    emit(e.output.y, 1, implied.forced_xprime());
    if (e.output.d_var != 0)
      emit(Bit::var(e.output.d_var), 2, implied.forced_d());
  }
}

void GcPlugin::check(const AssignmentView &view, std::vector<ExtClause> &out) {
  std::vector<int> antecedent;
  for (const GcEntry &e : structure_.entries) {
    antecedent.clear();
    bool informative_inputs = false;
    std::array<Condition, 3> in;
    for (size_t i = 0; i < e.inputs.size(); i++) {
      in[i] = read_condition(view, e.inputs[i], &antecedent);
      if (!in[i].full()) informative_inputs = true;
    }
    if (!informative_inputs) continue;

    Condition implied =
        table_for(e.op).lookup(std::span(in.data(), e.inputs.size()));
    if (implied.full()) continue;

    std::vector<int> out_literals;
    Condition fixed = read_condition(view, e.output, &out_literals);
    if (!implied.meet(fixed).empty()) continue;

    // The table-implied condition and the assigned one exclude each other.
    ExtClause clause;
    clause.reserve(antecedent.size() + out_literals.size());
    for (int lit : antecedent) clause.push_back(-lit);
    for (int lit : out_literals) clause.push_back(-lit);
    out.push_back(std::move(clause));
    contradictions_++;
  }
}

} // namespace progsat
