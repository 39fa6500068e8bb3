#pragma once

#include "progsat/cnf_builder.hpp"
#include "progsat/sha_reference.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace progsat {

// One bitwise step of the round function, remembered so a differential
// instance can pair the two circuit copies and attach difference
// variables. Inputs are the (possibly rewired) operand views at the time
// the gate was applied.
struct ShaGateRecord {
  enum class Op { Xor3, If, Maj };
  Op op;
  int round;
  std::string role; // "sigma0", "ch", ... with the round appended by users
  std::vector<Word> inputs;
  Word output;
};

struct ShaEncoding {
  HashFunction function;
  int rounds = 0;
  std::vector<Word> message;  // the 16 block words
  std::vector<Word> schedule; // W[0..rounds-1], message words included
  std::vector<Word> state_a;  // per-round A outputs (SHA-1: the a register)
  std::vector<Word> state_e;  // per-round E outputs (SHA-256 only)
  std::vector<Word> digest;
  std::vector<ShaGateRecord> gates;
};

struct ShaEncodeOptions {
  HashFunction function = HashFunction::Sha256;
  int rounds = 64;
  // Message words are fresh variables unless a fixed block is supplied.
  std::optional<std::array<uint32_t, 16>> fixed_message;
  bool register_names = true; // W[t] and digest[i] into the VarMap
  std::string prefix;         // name prefix, e.g. "x." for collision copies
  bool record_gates = false;
};

// r rounds of the compression function plus the feed-forward of the
// standard IV; the message schedule is expanded only up to W[r-1].
ShaEncoding encode_sha(CnfBuilder &b, const ShaEncodeOptions &opt);

// Round suffix from an unknown state: rounds [first_round, total_rounds)
// from caller-supplied state and schedule words, then the feed-forward of
// the standard IV. Shared words let several fault copies reference the
// same unknowns.
struct ShaSuffixEncoding {
  std::vector<Word> digest;
};
ShaSuffixEncoding encode_sha_suffix(CnfBuilder &b, HashFunction function,
                                    int total_rounds, int first_round,
                                    std::span<const Word> state_in,
                                    std::span<const Word> w_suffix);

// Fresh word constrained bit-for-bit equal to the given one.
Word freshen_word(CnfBuilder &b, const Word &w);

} // namespace progsat
