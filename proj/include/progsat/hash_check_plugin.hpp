#pragma once

#include "progsat/extension.hpp"
#include "progsat/sha_reference.hpp"

#include <vector>

namespace progsat {

// What the solution-verification hook needs to know: which variables hold
// the secret bits, how to hash them, and the digest they must produce.
struct MessageSpec {
  HashFunction function = HashFunction::Sha256;
  int total_rounds = 64;
  // 0: the secret words are the 16 message block words, hashed from the
  // standard IV. Otherwise: the secret words are the internal state at this
  // round followed by the schedule words of the remaining rounds.
  int frontier_round = 0;
  std::vector<std::vector<int>> secret_words; // variable ids, LSB first
  std::vector<uint32_t> digest;               // expected digest words

  std::vector<uint32_t> recompute(const std::vector<uint32_t> &words) const;
  size_t secret_bits() const;
};

// Programmatic conflict analysis for preimage-style instances: as soon as
// every secret bit is assigned, the candidate is hashed natively; a
// mismatch yields one conflict clause blocking the spurious assignment.
class HashCheck : public Extension {
public:
  explicit HashCheck(MessageSpec spec, std::string name = "hashcheck");

  const std::string &name() const override { return name_; }
  void check(const AssignmentView &view, std::vector<ExtClause> &out) override;

  uint64_t rejections() const { return rejections_; }

private:
  std::string name_;
  MessageSpec spec_;
  uint64_t rejections_ = 0;
};

} // namespace progsat
