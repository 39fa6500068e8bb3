#pragma once

#include "progsat/cnf_builder.hpp"
#include "progsat/hash_check_plugin.hpp"
#include "progsat/sha_reference.hpp"
#include "progsat/solver.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace progsat {

// Fault-injection campaign description: N independent executions, each
// with a uniform random XOR difference of `width` low bits applied to one
// register or schedule word right before the given round.
struct FaultSpec {
  HashFunction function = HashFunction::Sha256;
  int total_rounds = 64;
  int round = 56;           // injection round; also the unknown frontier
  std::string target = "a"; // state register "a".."h" or schedule word "w<t>"
  int width = 32;           // affected low bits of each fault value
  int count = 1;            // number of faulty executions

  int suffix_rounds() const { return total_rounds - round; }
  void validate() const;
  // -1 for a schedule target, else the register index.
  int register_index() const;
  int schedule_target() const; // absolute round of the targeted W, or -1
};

// What the simulator measured, plus the ground truth it keeps aside for
// verifying recoveries in tests. The ground truth never reaches the
// instance.
struct FaultSimulation {
  std::vector<uint32_t> correct_digest;
  std::vector<std::vector<uint32_t>> faulty_digests;
  std::vector<uint32_t> secret_words; // frontier state then suffix schedule
  std::vector<uint32_t> deltas;
};

FaultSimulation simulate_faults(const std::array<uint32_t, 16> &message,
                                const FaultSpec &spec, uint64_t seed,
                                bool force_zero_delta = false);

// CNF with one suffix copy per digest over shared unknown state and
// schedule words; fault values enter as free delta words XORed into the
// target.
struct AfaInstance {
  FaultSpec spec;
  uint64_t seed = 0;
  Cnf cnf;
  VarMap varmap;
  std::vector<uint32_t> correct_digest;
  std::vector<std::vector<uint32_t>> faulty_digests;
  MessageSpec message_spec;
  std::vector<AdderGroup> adder_groups;
  std::vector<std::vector<int>> delta_ids;
  std::vector<std::vector<int>> secret_ids;
};

AfaInstance build_afa_instance(const FaultSpec &spec,
                               const std::vector<uint32_t> &correct_digest,
                               const std::vector<std::vector<uint32_t>> &faulty,
                               uint64_t seed);

struct AttackPlugins {
  bool adder = true;
  bool hash_check = true;
};

enum class AttackVerdict {
  Confirmed,       // digests reproduce and the secret equals the ground truth
  Admissible,      // digests reproduce; no ground truth to confirm against
  EncoderMismatch, // model does not reproduce the digests natively
  NotApplicable    // solver did not return SAT
};

const char *to_string(AttackVerdict v);

struct AttackOutcome {
  Result result = Result::Indeterminate;
  AttackVerdict verdict = AttackVerdict::NotApplicable;
  std::vector<uint32_t> secret;
  std::vector<uint32_t> deltas;
  SolveStats stats;
  double wall_seconds = 0.0;
};

// Solves the instance and verifies any model natively: the recovered
// secret must reproduce the correct digest and, with the recovered fault
// values, every faulty digest. A supplied ground truth upgrades a verified
// recovery to Confirmed.
AttackOutcome run_attack(const AfaInstance &instance, AttackPlugins plugins,
                         Budget budget,
                         const std::vector<uint32_t> *ground_truth = nullptr);

// Digest reproduction check used by run_attack, exposed for tests.
bool afa_secret_explains(const AfaInstance &instance,
                         const std::vector<uint32_t> &secret,
                         const std::vector<uint32_t> &deltas);

} // namespace progsat
