#pragma once

#include "progsat/condition.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace progsat {

enum class GcOp { If, Maj, Xor2, Xor3 };

const char *to_string(GcOp op);
GcOp gc_op_from(const std::string &name);
int gc_arity(GcOp op);
bool gc_eval(GcOp op, std::span<const bool> inputs);

enum class RuleMode { Generalized16, XorDiff1Bit };

// Propagation table for one bitwise operation: for every tuple of input
// conditions, the condition of the output pair — the exact image of the
// operation over the input sets. In 1-bit XOR-difference mode the image is
// flattened onto the {?, -, x, #} alphabet.
class RuleTable {
public:
  RuleTable(GcOp op, RuleMode mode);

  GcOp op() const { return op_; }
  RuleMode mode() const { return mode_; }
  int arity() const { return arity_; }

  Condition lookup(std::span<const Condition> inputs) const;
  Condition lookup_by_index(size_t index) const {
    return Condition(out_[index]);
  }
  size_t size() const { return out_.size(); }
  static size_t index_of(std::span<const Condition> inputs);

  void set(std::span<const Condition> inputs, Condition out);

private:
  GcOp op_;
  RuleMode mode_;
  int arity_;
  std::vector<uint8_t> out_;
};

// Exact set-image construction, enumerating every pair combination.
RuleTable build_rule_table(GcOp op, RuleMode mode);

// Flat text exchange format: a `ruletable <op> <arity> <mode>` header, then
// one `<inputs> <output>` line per entry in condition characters.
void save_rule_table(std::ostream &out, const RuleTable &table);
RuleTable load_rule_table(std::istream &in);

// Informative-rule counts under explicit counting conventions; the
// published tally for IF lands near but the paper leaves the convention
// undefined, so these are reported rather than asserted.
struct RuleCensus {
  uint64_t informative_all = 0;        // output != '?' over every tuple
  uint64_t informative_no_hash = 0;    // inputs without '#'
  uint64_t informative_proper = 0;     // inputs without '#' and '?'
  std::string report(const std::string &label) const;
};
RuleCensus census_rules(const RuleTable &table);

} // namespace progsat
