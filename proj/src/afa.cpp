#include "progsat/afa.hpp"

#include "progsat/adder_plugin.hpp"
#include "progsat/sha_encoder.hpp"

#include <cassert>
#include <chrono>
#include <random>

namespace progsat {

void FaultSpec::validate() const {
  if (total_rounds < 1 || total_rounds > max_rounds(function))
    throw BuildError("total rounds out of range");
  if (round < 0 || round >= total_rounds)
    throw BuildError("injection round must precede the final round");
  if (width < 1 || width > 32) throw BuildError("fault width out of range");
  if (count < 0) throw BuildError("fault count must be non-negative");
  if (register_index() < 0 && schedule_target() < 0)
    throw BuildError("unknown fault target '" + target + "'");
}

int FaultSpec::register_index() const {
  int nstate = digest_words(function);
  if (target.size() == 1 && target[0] >= 'a' && target[0] < 'a' + nstate)
    return target[0] - 'a';
  return -1;
}

int FaultSpec::schedule_target() const {
  if (target.size() < 2 || target[0] != 'w') return -1;
  try {
    int t = std::stoi(target.substr(1));
    if (t >= round && t < total_rounds) return t;
  } catch (const std::exception &) {
  }
  return -1;
}

const char *to_string(AttackVerdict v) {
  switch (v) {
  case AttackVerdict::Confirmed: return "CONFIRMED";
  case AttackVerdict::Admissible: return "ADMISSIBLE";
  case AttackVerdict::EncoderMismatch: return "ENCODER_MISMATCH";
  default: return "NOT_APPLICABLE";
  }
}

namespace {

std::vector<uint32_t> suffix_digest(const FaultSpec &spec,
                                    std::vector<uint32_t> words,
                                    uint32_t delta) {
  int nstate = digest_words(spec.function);
  int reg = spec.register_index();
  if (delta != 0 || reg >= 0 || spec.schedule_target() >= 0) {
    if (reg >= 0) words[reg] ^= delta;
    else words[nstate + (spec.schedule_target() - spec.round)] ^= delta;
  }
  std::span<const uint32_t> w(words.data() + nstate, spec.suffix_rounds());
  std::vector<uint32_t> out;
  if (spec.function == HashFunction::Sha256) {
    std::array<uint32_t, 8> st;
    std::copy_n(words.begin(), 8, st.begin());
    auto fin = sha256_rounds_from(st, w, spec.round, spec.suffix_rounds());
    for (int i = 0; i < 8; i++) out.push_back(fin[i] + kSha256Iv[i]);
  } else {
    std::array<uint32_t, 5> st;
    std::copy_n(words.begin(), 5, st.begin());
    auto fin = sha1_rounds_from(st, w, spec.round, spec.suffix_rounds());
    for (int i = 0; i < 5; i++) out.push_back(fin[i] + kSha1Iv[i]);
  }
  return out;
}

} // namespace

FaultSimulation simulate_faults(const std::array<uint32_t, 16> &message,
                                const FaultSpec &spec, uint64_t seed,
                                bool force_zero_delta) {
  spec.validate();
  FaultSimulation sim;
  int nstate = digest_words(spec.function);

  std::vector<uint32_t> schedule =
      spec.function == HashFunction::Sha256
          ? sha256_schedule(message, spec.total_rounds)
          : sha1_schedule(message, spec.total_rounds);

  // Frontier state entering the injection round.
  if (spec.function == HashFunction::Sha256) {
    auto st = sha256_rounds_from(kSha256Iv, schedule, 0, spec.round);
    sim.secret_words.assign(st.begin(), st.end());
  } else {
    auto st = sha1_rounds_from(kSha1Iv, schedule, 0, spec.round);
    sim.secret_words.assign(st.begin(), st.end());
  }
  for (int t = spec.round; t < spec.total_rounds; t++)
    sim.secret_words.push_back(schedule[t]);
  assert(static_cast<int>(sim.secret_words.size()) ==
         nstate + spec.suffix_rounds());

  sim.correct_digest = suffix_digest(spec, sim.secret_words, 0);

  std::mt19937_64 rng(seed);
  uint64_t mask = spec.width == 32 ? 0xFFFFFFFFull
                                   : ((uint64_t{1} << spec.width) - 1);
  for (int i = 0; i < spec.count; i++) {
    uint32_t delta =
        force_zero_delta ? 0 : static_cast<uint32_t>(rng() & mask);
    sim.deltas.push_back(delta);
    sim.faulty_digests.push_back(suffix_digest(spec, sim.secret_words, delta));
  }
  return sim;
}

AfaInstance build_afa_instance(const FaultSpec &spec,
                               const std::vector<uint32_t> &correct_digest,
                               const std::vector<std::vector<uint32_t>> &faulty,
                               uint64_t seed) {
  spec.validate();
  if (static_cast<int>(faulty.size()) != spec.count)
    throw BuildError("faulty digest count does not match the fault spec");
  int nstate = digest_words(spec.function);
  if (static_cast<int>(correct_digest.size()) != nstate)
    throw BuildError("correct digest word count mismatch");
  for (const auto &d : faulty)
    if (static_cast<int>(d.size()) != nstate)
      throw BuildError("faulty digest word count mismatch");

  AfaInstance inst;
  inst.spec = spec;
  inst.seed = seed;
  inst.correct_digest = correct_digest;
  inst.faulty_digests = faulty;

  CnfBuilder b;
  std::vector<Word> state, wsuf;
  for (int i = 0; i < nstate; i++) {
    state.push_back(b.new_word(32));
    b.register_word("state[" + std::to_string(i) + "]", state[i]);
  }
  for (int t = spec.round; t < spec.total_rounds; t++) {
    wsuf.push_back(b.new_word(32));
    b.register_word("W[" + std::to_string(t) + "]", wsuf.back());
  }

  auto correct = encode_sha_suffix(b, spec.function, spec.total_rounds,
                                   spec.round, state, wsuf);
  for (int i = 0; i < nstate; i++)
    b.fix_word(correct.digest[i], correct_digest[i]);

  int reg = spec.register_index();
  int wt = spec.schedule_target();
  for (int i = 0; i < spec.count; i++) {
    // Low `width` fresh bits, upper bits zero.
    Word delta(32, Bit::falsum());
    for (int j = 0; j < spec.width; j++) delta[j] = b.new_bit();
    b.register_word("delta[" + std::to_string(i) + "]", delta);
    inst.delta_ids.push_back(b.var_map().resolve("delta[" + std::to_string(i) + "]"));

    std::vector<Word> fstate = state, fw = wsuf;
    std::array<Word, 2> xor_ops;
    if (reg >= 0) {
      xor_ops = {state[reg], delta};
      fstate[reg] = b.gate(GateKind::Xor, xor_ops);
    } else {
      xor_ops = {wsuf[wt - spec.round], delta};
      fw[wt - spec.round] = b.gate(GateKind::Xor, xor_ops);
    }
    auto copy = encode_sha_suffix(b, spec.function, spec.total_rounds,
                                  spec.round, fstate, fw);
    for (int k = 0; k < nstate; k++) b.fix_word(copy.digest[k], faulty[i][k]);
  }

  inst.message_spec.function = spec.function;
  inst.message_spec.total_rounds = spec.total_rounds;
  inst.message_spec.frontier_round = spec.round;
  inst.message_spec.digest = correct_digest;
  for (int i = 0; i < nstate; i++) {
    auto ids = b.var_map().resolve("state[" + std::to_string(i) + "]");
    inst.message_spec.secret_words.push_back(ids);
    inst.secret_ids.push_back(ids);
  }
  for (int t = spec.round; t < spec.total_rounds; t++) {
    auto ids = b.var_map().resolve("W[" + std::to_string(t) + "]");
    inst.message_spec.secret_words.push_back(ids);
    inst.secret_ids.push_back(ids);
  }

  b.var_map().set_meta(to_string(spec.function), spec.total_rounds);
  inst.varmap = b.var_map();
  inst.adder_groups = b.adder_groups();
  inst.cnf = b.to_cnf();
  return inst;
}

bool afa_secret_explains(const AfaInstance &inst,
                         const std::vector<uint32_t> &secret,
                         const std::vector<uint32_t> &deltas) {
  if (suffix_digest(inst.spec, secret, 0) != inst.correct_digest) return false;
  for (int i = 0; i < inst.spec.count; i++)
    if (suffix_digest(inst.spec, secret, deltas[i]) != inst.faulty_digests[i])
      return false;
  return true;
}

AttackOutcome run_attack(const AfaInstance &inst, AttackPlugins plugins,
                         Budget budget,
                         const std::vector<uint32_t> *ground_truth) {
  AttackOutcome out;
  Solver solver(inst.cnf);
  auto map = std::make_shared<VarMap>(inst.varmap);
  solver.set_var_map(map);
  if (plugins.adder)
    solver.register_extension(
        std::make_shared<AdderPropagator>(inst.adder_groups));
  if (plugins.hash_check)
    solver.register_extension(std::make_shared<HashCheck>(inst.message_spec));
  solver.set_budget(budget);

  auto t0 = std::chrono::steady_clock::now();
  out.result = solver.solve();
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  out.stats = solver.stats();
  if (out.result != Result::Sat) return out;

  const auto &model = solver.model();
  auto word_of = [&](const std::vector<int> &ids) {
    uint32_t w = 0;
    for (size_t j = 0; j < ids.size(); j++)
      if (model[ids[j] - 1] == lbool::True) w |= uint32_t{1} << j;
    return w;
  };
  for (const auto &ids : inst.secret_ids) out.secret.push_back(word_of(ids));
  for (const auto &ids : inst.delta_ids) out.deltas.push_back(word_of(ids));

  if (!afa_secret_explains(inst, out.secret, out.deltas)) {
    out.verdict = AttackVerdict::EncoderMismatch;
    return out;
  }
  if (ground_truth && *ground_truth == out.secret)
    out.verdict = AttackVerdict::Confirmed;
  else
    out.verdict = AttackVerdict::Admissible;
  return out;
}

} // namespace progsat
