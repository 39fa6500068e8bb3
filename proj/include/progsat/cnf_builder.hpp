#pragma once

#include "progsat/bit.hpp"
#include "progsat/cnf.hpp"
#include "progsat/varmap.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace progsat {

enum class GateKind { Xor, And, Or, Not, If, Maj };

// One multi-operand addition, remembered so the adder extension can watch
// its columns at solve time.
struct AdderGroup {
  std::vector<std::vector<Bit>> operands; // operands[i][bit]
  std::vector<Bit> output;
  int width() const { return static_cast<int>(output.size()); }
};

// Builds a CNF circuit bottom-up: fresh variables, Tseitin-translated
// gates with constant folding, rewiring rotations/shifts, and carry-save
// multi-operand adders. Named words are collected into a VarMap.
class CnfBuilder {
public:
  int new_var() { return next_var_++; }
  Bit new_bit() { return Bit::var(new_var()); }
  Word new_word(int width);
  Word constant_word(uint64_t value, int width) const;

  void add_clause(std::span<const Bit> lits);
  void add_clause(std::initializer_list<Bit> lits) {
    add_clause(std::span<const Bit>(lits.begin(), lits.size()));
  }
  // Fixes a bit with a unit clause.
  void fix_bit(Bit b, bool value);
  void fix_word(const Word &w, uint32_t value);

  // Bit-level gates; all fold constants and coincident operands.
  Bit band(Bit a, Bit b);
  Bit bor(Bit a, Bit b);
  Bit bxor(Bit a, Bit b);
  Bit bxor3(Bit a, Bit b, Bit c);
  Bit bmaj(Bit a, Bit b, Bit c);
  Bit bif(Bit x, Bit y, Bit z);

  // Word-level gate of the given kind; operand widths must agree and the
  // arity must match (NOT unary, IF/MAJ ternary, others binary or ternary
  // for XOR).
  Word gate(GateKind kind, std::span<const Word> operands);

  // Rewiring only: no clauses, no fresh variables.
  Word rotr(const Word &w, int k) const;
  Word rotl(const Word &w, int k) const;
  Word shr(const Word &w, int k) const;

  // Modular sum of 2..7 equal-width operands via full-adder chains in
  // carry-save order. The encoding is compact and deliberately not
  // directionally complete under unit propagation; the adder extension
  // closes that gap at solve time.
  Word add_multi(std::span<const Word> operands);

  void register_word(const std::string &name, const Word &w);

  int num_vars() const { return next_var_ - 1; }
  size_t num_clauses() const { return clauses_.size(); }
  Cnf to_cnf() const;
  VarMap &var_map() { return map_; }
  const VarMap &var_map() const { return map_; }
  const std::vector<AdderGroup> &adder_groups() const { return groups_; }

  // Extracts a word's value from a solver model (indexed by 0-based var).
  static uint64_t word_value(const Word &w, const std::vector<lbool> &model);

private:
  struct BitPair {
    Bit sum, carry;
  };
  BitPair half_adder(Bit a, Bit b);
  BitPair full_adder(Bit a, Bit b, Bit c);

  // Every k-th full-adder cell uses the directionally incomplete relation
  // cover; the rest propagate forward natively.
  static constexpr uint32_t kStuckCellPeriod = 6;

  int next_var_ = 1;
  uint32_t fa_cell_counter_ = 0;
  std::vector<std::vector<int>> clauses_;
  VarMap map_;
  std::vector<AdderGroup> groups_;
};

} // namespace progsat
