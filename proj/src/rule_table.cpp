#include "progsat/rule_table.hpp"

#include "progsat/types.hpp"

#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>

namespace progsat {

const char *to_string(GcOp op) {
  switch (op) {
  case GcOp::If: return "IF";
  case GcOp::Maj: return "MAJ";
  case GcOp::Xor2: return "XOR2";
  default: return "XOR3";
  }
}

GcOp gc_op_from(const std::string &name) {
  if (name == "IF") return GcOp::If;
  if (name == "MAJ") return GcOp::Maj;
  if (name == "XOR2") return GcOp::Xor2;
  if (name == "XOR3") return GcOp::Xor3;
  throw std::invalid_argument("unknown rule-table operation '" + name + "'");
}

int gc_arity(GcOp op) { return op == GcOp::Xor2 ? 2 : 3; }

bool gc_eval(GcOp op, std::span<const bool> in) {
  switch (op) {
  case GcOp::If: return in[0] ? in[1] : in[2];
  case GcOp::Maj: return (in[0] + in[1] + in[2]) >= 2;
  case GcOp::Xor2: return in[0] ^ in[1];
  default: return in[0] ^ in[1] ^ in[2];
  }
}

RuleTable::RuleTable(GcOp op, RuleMode mode)
    : op_(op), mode_(mode), arity_(gc_arity(op)) {
  out_.assign(size_t{1} << (4 * arity_), 0xF);
}

size_t RuleTable::index_of(std::span<const Condition> inputs) {
  size_t idx = 0;
  for (size_t i = 0; i < inputs.size(); i++)
    idx |= size_t{inputs[i].mask()} << (4 * i);
  return idx;
}

Condition RuleTable::lookup(std::span<const Condition> inputs) const {
  assert(static_cast<int>(inputs.size()) == arity_);
  return Condition(out_[index_of(inputs)]);
}

void RuleTable::set(std::span<const Condition> inputs, Condition out) {
  out_[index_of(inputs)] = out.mask();
}

namespace {

// Flattens a set image onto the 1-bit XOR-difference alphabet.
Condition project_1bit(Condition image) {
  if (image.empty()) return cond_contra;
  if (image.subset_of(cond_equal)) return cond_equal;
  if (image.subset_of(cond_diff)) return cond_diff;
  return cond_unknown;
}

} // namespace

RuleTable build_rule_table(GcOp op, RuleMode mode) {
  RuleTable table(op, mode);
  int n = table.arity();
  size_t total = size_t{1} << (4 * n);
  std::vector<Condition> inputs(n);
  std::array<bool, 3> first{}, second{};

  for (size_t idx = 0; idx < total; idx++) {
    for (int i = 0; i < n; i++)
      inputs[i] = Condition(static_cast<uint8_t>((idx >> (4 * i)) & 0xF));

    uint8_t image = 0;
    // Every combination of pairs drawn from the input sets.
    std::vector<int> pick(n, 0);
    bool done = false;
    while (!done) {
      bool feasible = true;
      for (int i = 0; i < n; i++) {
        bool x = pick[i] & 1, xp = pick[i] >> 1;
        if (!inputs[i].contains(x, xp)) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        for (int i = 0; i < n; i++) {
          first[i] = pick[i] & 1;
          second[i] = pick[i] >> 1;
        }
        bool y = gc_eval(op, std::span(first.data(), n));
        bool yp = gc_eval(op, std::span(second.data(), n));
        image |= 1u << ((y ? 1 : 0) + (yp ? 2 : 0));
      }
      int i = 0;
      for (; i < n; i++) {
        if (++pick[i] < 4) break;
        pick[i] = 0;
      }
      done = (i == n);
    }

    Condition out{image};
    if (mode == RuleMode::XorDiff1Bit) out = project_1bit(out);
    table.set(inputs, out);
  }
  return table;
}

void save_rule_table(std::ostream &out, const RuleTable &table) {
  out << "ruletable " << to_string(table.op()) << " " << table.arity() << " "
      << (table.mode() == RuleMode::Generalized16 ? "generalized_16"
                                                  : "xor_diff_1bit")
      << "\n";
  int n = table.arity();
  for (size_t idx = 0; idx < table.size(); idx++) {
    for (int i = 0; i < n; i++)
      out << Condition(static_cast<uint8_t>((idx >> (4 * i)) & 0xF)).to_char();
    out << " " << table.lookup_by_index(idx).to_char() << "\n";
  }
}

RuleTable load_rule_table(std::istream &in) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty rule-table file", 1);
  line_no++;
  std::istringstream header(line);
  std::string tag, opname, modename;
  int arity;
  if (!(header >> tag >> opname >> arity >> modename) || tag != "ruletable")
    throw ParseError("expected 'ruletable <op> <arity> <mode>' header", line_no);
  GcOp op = gc_op_from(opname);
  if (arity != gc_arity(op))
    throw ParseError("rule-table arity does not match operation", line_no);
  RuleMode mode;
  if (modename == "generalized_16") mode = RuleMode::Generalized16;
  else if (modename == "xor_diff_1bit") mode = RuleMode::XorDiff1Bit;
  else throw ParseError("unknown rule-table mode '" + modename + "'", line_no);

  RuleTable table(op, mode);
  std::vector<Condition> inputs(arity);
  size_t seen = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string ins;
    char outc;
    if (!(row >> ins >> outc) || static_cast<int>(ins.size()) != arity)
      throw ParseError("malformed rule-table entry", line_no);
    for (int i = 0; i < arity; i++) {
      if (!Condition::valid_char(ins[i]))
        throw ParseError(std::string("invalid condition character '") +
                             ins[i] + "'",
                         line_no);
      inputs[i] = Condition::from_char(ins[i]);
    }
    if (!Condition::valid_char(outc))
      throw ParseError("invalid output condition character", line_no);
    table.set(inputs, Condition::from_char(outc));
    seen++;
  }
  if (seen != table.size())
    throw ParseError("rule-table entry count mismatch", line_no);
  return table;
}

RuleCensus census_rules(const RuleTable &table) {
  RuleCensus census;
  int n = table.arity();
  for (size_t idx = 0; idx < table.size(); idx++) {
    Condition out = table.lookup_by_index(idx);
    if (out.full()) continue;
    census.informative_all++;
    bool has_hash = false, has_unknown = false;
    for (int i = 0; i < n; i++) {
      uint8_t m = (idx >> (4 * i)) & 0xF;
      has_hash |= (m == 0);
      has_unknown |= (m == 0xF);
    }
    if (!has_hash) census.informative_no_hash++;
    if (!has_hash && !has_unknown) census.informative_proper++;
  }
  return census;
}

std::string RuleCensus::report(const std::string &label) const {
  std::ostringstream out;
  out << label << " informative rules:"
      << " all-tuples=" << informative_all
      << " inputs-without-#=" << informative_no_hash
      << " inputs-without-#-and-?=" << informative_proper;
  return out.str();
}

} // namespace progsat
