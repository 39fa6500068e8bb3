#pragma once

#include "progsat/types.hpp"

#include <cassert>
#include <cstring>
#include <span>
#include <vector>

namespace progsat {

using CRef = uint32_t;
constexpr CRef cref_undef = UINT32_MAX;

// Clauses live in one flat uint32 arena. Layout per clause:
//   [0] size << 2 | learnt | from_extension
//   [1] lbd
//   [2] activity (float bits)
//   [3..] literal indices
class Clause {
public:
  explicit Clause(uint32_t *base) : base_(base) {}

  int size() const { return static_cast<int>(base_[0] >> 2); }
  bool learnt() const { return base_[0] & 1; }
  bool from_extension() const { return base_[0] & 2; }

  uint32_t lbd() const { return base_[1]; }
  void set_lbd(uint32_t v) { base_[1] = v; }

  float activity() const {
    float f;
    std::memcpy(&f, &base_[2], sizeof(f));
    return f;
  }
  void set_activity(float f) { std::memcpy(&base_[2], &f, sizeof(f)); }

  Lit &operator[](int i) { return lits()[i]; }
  Lit operator[](int i) const { return lits()[i]; }

  Lit *begin() { return lits(); }
  Lit *end() { return lits() + size(); }
  const Lit *begin() const { return lits(); }
  const Lit *end() const { return lits() + size(); }

  static uint32_t words_needed(int nlits) { return 3 + nlits; }

private:
  Lit *lits() const { return reinterpret_cast<Lit *>(base_ + 3); }
  uint32_t *base_;
};

class ClauseArena {
public:
  CRef alloc(std::span<const Lit> lits, bool learnt, bool from_extension) {
    CRef ref = static_cast<CRef>(mem_.size());
    mem_.resize(mem_.size() + Clause::words_needed((int)lits.size()));
    uint32_t *base = mem_.data() + ref;
    base[0] = (static_cast<uint32_t>(lits.size()) << 2) | (learnt ? 1u : 0u) |
              (from_extension ? 2u : 0u);
    base[1] = 0;
    base[2] = 0;
    std::memcpy(base + 3, lits.data(), lits.size() * sizeof(Lit));
    return ref;
  }

  Clause operator[](CRef ref) {
    assert(ref < mem_.size());
    return Clause(mem_.data() + ref);
  }
  const Clause operator[](CRef ref) const {
    assert(ref < mem_.size());
    return Clause(const_cast<uint32_t *>(mem_.data() + ref));
  }

  size_t size_words() const { return mem_.size(); }
  void clear() { mem_.clear(); }
  void truncate(size_t words) { mem_.resize(words); }
  void append(const ClauseArena &other) {
    mem_.insert(mem_.end(), other.mem_.begin(), other.mem_.end());
  }

private:
  std::vector<uint32_t> mem_;
};

struct Watcher {
  CRef cref;
  Lit blocker;
};

} // namespace progsat
