#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace progsat {

// A circuit bit: either a constant or a literal of a 1-based DIMACS
// variable. Encoded AIGER-style: 0/1 are the constants, 2v is variable v,
// 2v+1 its negation. Negation is a bit flip and never allocates.
struct Bit {
  uint32_t code = 0;

  static Bit falsum() { return {0}; }
  static Bit verum() { return {1}; }
  static Bit var(int dimacs_var, bool negated = false) {
    assert(dimacs_var >= 1);
    return {2u * static_cast<uint32_t>(dimacs_var) + (negated ? 1u : 0u)};
  }
  static Bit constant(bool v) { return {v ? 1u : 0u}; }
  static Bit from_code(uint32_t c) { return {c}; }

  bool is_const() const { return code < 2; }
  bool const_value() const {
    assert(is_const());
    return code == 1;
  }
  int var_id() const {
    assert(!is_const());
    return static_cast<int>(code >> 1);
  }
  bool negated() const { return code & 1; }
  int dimacs() const {
    assert(!is_const());
    int v = static_cast<int>(code >> 1);
    return negated() ? -v : v;
  }

  Bit operator~() const { return {code ^ 1}; }
  bool operator==(const Bit &o) const { return code == o.code; }
  bool operator!=(const Bit &o) const { return code != o.code; }
};

// A machine word as a vector of bits, least significant bit first.
using Word = std::vector<Bit>;

} // namespace progsat
