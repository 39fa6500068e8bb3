#include "progsat/condition.hpp"

#include <stdexcept>

namespace progsat {

namespace {
// Index = mask value.
constexpr char kChars[16] = {'#', '0', 'u', '3', 'n', '5', 'x', '7',
                             '1', '-', 'A', 'B', 'C', 'D', 'E', '?'};
} // namespace

Condition Condition::from_char(char c) {
  for (int m = 0; m < 16; m++)
    if (kChars[m] == c) return Condition(static_cast<uint8_t>(m));
  throw std::invalid_argument(std::string("not a generalized condition: '") +
                              c + "'");
}

bool Condition::valid_char(char c) {
  for (int m = 0; m < 16; m++)
    if (kChars[m] == c) return true;
  return false;
}

char Condition::to_char() const { return kChars[mask_]; }

Condition Condition::from_assignment(int coord, bool value) {
  switch (coord) {
  case 0: // x
    return Condition(value ? 0xA : 0x5);
  case 1: // x'
    return Condition(value ? 0xC : 0x3);
  default: // d
    return Condition(value ? 0x6 : 0x9);
  }
}

std::optional<bool> Condition::forced_x() const {
  if (empty()) return std::nullopt;
  if ((mask_ & 0x5) == 0) return true;  // no pair with x = 0
  if ((mask_ & 0xA) == 0) return false; // no pair with x = 1
  return std::nullopt;
}

std::optional<bool> Condition::forced_xprime() const {
  if (empty()) return std::nullopt;
  if ((mask_ & 0x3) == 0) return true;  // no pair with x' = 0
  if ((mask_ & 0xC) == 0) return false; // no pair with x' = 1
  return std::nullopt;
}

std::optional<bool> Condition::forced_d() const {
  if (empty()) return std::nullopt;
  if ((mask_ & 0x9) == 0) return true;  // only differing pairs
  if ((mask_ & 0x6) == 0) return false; // only equal pairs
  return std::nullopt;
}

} // namespace progsat
