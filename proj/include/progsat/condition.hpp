#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace progsat {

// A generalized condition: the set of values a bit pair (x, x') may take
// across two related computations. Encoded as a 4-bit mask with
//   bit 0 = (0,0), bit 1 = (1,0), bit 2 = (0,1), bit 3 = (1,1).
// The sixteen sets carry one display character each; the hex-digit
// characters equal their own mask value.
class Condition {
public:
  constexpr Condition() : mask_(0xF) {}
  explicit constexpr Condition(uint8_t mask) : mask_(mask & 0xF) {}

  static Condition from_char(char c);
  char to_char() const;
  static bool valid_char(char c);

  uint8_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }   // '#'
  bool full() const { return mask_ == 0xF; }  // '?'
  bool contains(bool x, bool xprime) const {
    return mask_ & (1u << ((x ? 1 : 0) + (xprime ? 2 : 0)));
  }

  Condition meet(Condition o) const { return Condition(mask_ & o.mask_); }
  bool subset_of(Condition o) const { return (mask_ & ~o.mask_) == 0; }

  // Constraint contributed by a single assigned variable of the (x, x', d)
  // triple: coord 0 is x, 1 is x', 2 is d = x ^ x'.
  static Condition from_assignment(int coord, bool value);

  // Boolean facts the set forces, if any.
  std::optional<bool> forced_x() const;
  std::optional<bool> forced_xprime() const;
  std::optional<bool> forced_d() const;

  bool operator==(const Condition &o) const { return mask_ == o.mask_; }
  bool operator!=(const Condition &o) const { return mask_ != o.mask_; }

private:
  uint8_t mask_;
};

inline constexpr Condition cond_unknown{0xF}; // '?'
inline constexpr Condition cond_equal{0x9};   // '-'
inline constexpr Condition cond_diff{0x6};    // 'x'
inline constexpr Condition cond_contra{0x0};  // '#'

} // namespace progsat
