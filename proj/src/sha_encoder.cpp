#include "progsat/sha_encoder.hpp"

#include <cassert>

namespace progsat {

Word freshen_word(CnfBuilder &b, const Word &w) {
  Word f = b.new_word(static_cast<int>(w.size()));
  for (size_t j = 0; j < w.size(); j++) {
    b.add_clause({~f[j], w[j]});
    b.add_clause({f[j], ~w[j]});
  }
  return f;
}

namespace {

struct Recorder {
  bool enabled;
  std::vector<ShaGateRecord> records;

  void add(ShaGateRecord::Op op, int round, std::string role,
           std::vector<Word> inputs, const Word &output) {
    if (!enabled) return;
    records.push_back({op, round, std::move(role), std::move(inputs), output});
  }
};

Word xor3_recorded(CnfBuilder &b, Recorder &rec, int round,
                   const std::string &role, const Word &x, const Word &y,
                   const Word &z) {
  std::array<Word, 3> ops{x, y, z};
  Word out = b.gate(GateKind::Xor, ops);
  rec.add(ShaGateRecord::Op::Xor3, round, role, {x, y, z}, out);
  return out;
}

ShaEncoding encode_sha256_impl(CnfBuilder &b, const ShaEncodeOptions &opt) {
  ShaEncoding enc;
  enc.function = HashFunction::Sha256;
  enc.rounds = opt.rounds;
  Recorder rec{opt.record_gates, {}};

  for (int t = 0; t < 16; t++) {
    if (opt.fixed_message)
      enc.message.push_back(b.constant_word((*opt.fixed_message)[t], 32));
    else
      enc.message.push_back(b.new_word(32));
    if (opt.register_names && !opt.fixed_message)
      b.register_word(opt.prefix + "W[" + std::to_string(t) + "]",
                      enc.message[t]);
  }

  enc.schedule = enc.message;
  enc.schedule.resize(std::max(opt.rounds, 16));
  for (int t = 16; t < opt.rounds; t++) {
    Word s0 = xor3_recorded(b, rec, t, "sigma0", b.rotr(enc.schedule[t - 15], 7),
                            b.rotr(enc.schedule[t - 15], 18),
                            b.shr(enc.schedule[t - 15], 3));
    Word s1 = xor3_recorded(b, rec, t, "sigma1",
                            b.rotr(enc.schedule[t - 2], 17),
                            b.rotr(enc.schedule[t - 2], 19),
                            b.shr(enc.schedule[t - 2], 10));
    std::array<Word, 4> addends{s1, enc.schedule[t - 7], s0,
                                enc.schedule[t - 16]};
    enc.schedule[t] = b.add_multi(addends);
  }

  std::array<Word, 8> st;
  for (int i = 0; i < 8; i++) st[i] = b.constant_word(kSha256Iv[i], 32);

  for (int t = 0; t < opt.rounds; t++) {
    auto &[a, bb, c, d, e, f, g, h] = st;
    Word big1 = xor3_recorded(b, rec, t, "Sigma1", b.rotr(e, 6), b.rotr(e, 11),
                              b.rotr(e, 25));
    std::array<Word, 3> ch_ops{e, f, g};
    Word ch = b.gate(GateKind::If, ch_ops);
    rec.add(ShaGateRecord::Op::If, t, "ch", {e, f, g}, ch);

    Word kw = b.constant_word(kSha256K[t], 32);
    std::array<Word, 5> t1_ops{h, big1, ch, kw, enc.schedule[t]};
    Word t1 = b.add_multi(t1_ops);

    Word big0 = xor3_recorded(b, rec, t, "Sigma0", b.rotr(a, 2), b.rotr(a, 13),
                              b.rotr(a, 22));
    std::array<Word, 3> maj_ops{a, bb, c};
    Word mj = b.gate(GateKind::Maj, maj_ops);
    rec.add(ShaGateRecord::Op::Maj, t, "maj", {a, bb, c}, mj);

    std::array<Word, 2> e_ops{d, t1};
    Word new_e = b.add_multi(e_ops);
    std::array<Word, 3> a_ops{t1, big0, mj};
    Word new_a = b.add_multi(a_ops);

    h = g;
    g = f;
    f = e;
    e = new_e;
    d = c;
    c = bb;
    bb = a;
    a = new_a;
    enc.state_a.push_back(new_a);
    enc.state_e.push_back(new_e);
  }

  for (int i = 0; i < 8; i++) {
    std::array<Word, 2> ff{b.constant_word(kSha256Iv[i], 32), st[i]};
    Word d = freshen_word(b, b.add_multi(ff));
    enc.digest.push_back(d);
    if (opt.register_names)
      b.register_word(opt.prefix + "digest[" + std::to_string(i) + "]", d);
  }

  enc.gates = std::move(rec.records);
  return enc;
}

ShaEncoding encode_sha1_impl(CnfBuilder &b, const ShaEncodeOptions &opt) {
  ShaEncoding enc;
  enc.function = HashFunction::Sha1;
  enc.rounds = opt.rounds;
  Recorder rec{opt.record_gates, {}};

  for (int t = 0; t < 16; t++) {
    if (opt.fixed_message)
      enc.message.push_back(b.constant_word((*opt.fixed_message)[t], 32));
    else
      enc.message.push_back(b.new_word(32));
    if (opt.register_names && !opt.fixed_message)
      b.register_word(opt.prefix + "W[" + std::to_string(t) + "]",
                      enc.message[t]);
  }

  enc.schedule = enc.message;
  enc.schedule.resize(std::max(opt.rounds, 16));
  for (int t = 16; t < opt.rounds; t++) {
    Word x = xor3_recorded(b, rec, t, "wxor", enc.schedule[t - 3],
                           enc.schedule[t - 8], enc.schedule[t - 14]);
    std::array<Word, 2> x2{x, enc.schedule[t - 16]};
    enc.schedule[t] = b.rotl(b.gate(GateKind::Xor, x2), 1);
  }

  std::array<Word, 5> st;
  for (int i = 0; i < 5; i++) st[i] = b.constant_word(kSha1Iv[i], 32);

  for (int t = 0; t < opt.rounds; t++) {
    auto &[a, bb, c, d, e] = st;
    Word f;
    if (t < 20) {
      std::array<Word, 3> ops{bb, c, d};
      f = b.gate(GateKind::If, ops);
      rec.add(ShaGateRecord::Op::If, t, "ch", {bb, c, d}, f);
    } else if (t >= 40 && t < 60) {
      std::array<Word, 3> ops{bb, c, d};
      f = b.gate(GateKind::Maj, ops);
      rec.add(ShaGateRecord::Op::Maj, t, "maj", {bb, c, d}, f);
    } else {
      f = xor3_recorded(b, rec, t, "parity", bb, c, d);
    }
    Word kw = b.constant_word(kSha1K[t / 20], 32);
    std::array<Word, 5> t_ops{b.rotl(a, 5), f, e, kw, enc.schedule[t]};
    Word tmp = b.add_multi(t_ops);
    e = d;
    d = c;
    c = b.rotl(bb, 30);
    bb = a;
    a = tmp;
    enc.state_a.push_back(tmp);
  }

  for (int i = 0; i < 5; i++) {
    std::array<Word, 2> ff{b.constant_word(kSha1Iv[i], 32), st[i]};
    Word d = freshen_word(b, b.add_multi(ff));
    enc.digest.push_back(d);
    if (opt.register_names)
      b.register_word(opt.prefix + "digest[" + std::to_string(i) + "]", d);
  }

  enc.gates = std::move(rec.records);
  return enc;
}

} // namespace

ShaEncoding encode_sha(CnfBuilder &b, const ShaEncodeOptions &opt) {
  if (opt.rounds < 1 || opt.rounds > max_rounds(opt.function))
    throw BuildError("round count out of range");
  if (opt.function == HashFunction::Sha256) return encode_sha256_impl(b, opt);
  return encode_sha1_impl(b, opt);
}

ShaSuffixEncoding encode_sha_suffix(CnfBuilder &b, HashFunction function,
                                    int total_rounds, int first_round,
                                    std::span<const Word> state_in,
                                    std::span<const Word> w_suffix) {
  int nstate = digest_words(function);
  if (static_cast<int>(state_in.size()) != nstate)
    throw BuildError("suffix state word count mismatch");
  if (first_round < 0 || first_round >= total_rounds ||
      total_rounds > max_rounds(function))
    throw BuildError("suffix round range invalid");
  if (static_cast<int>(w_suffix.size()) != total_rounds - first_round)
    throw BuildError("suffix schedule word count mismatch");

  ShaSuffixEncoding out;
  if (function == HashFunction::Sha256) {
    std::array<Word, 8> st;
    for (int i = 0; i < 8; i++) st[i] = state_in[i];
    for (int t = first_round; t < total_rounds; t++) {
      auto &[a, bb, c, d, e, f, g, h] = st;
      std::array<Word, 3> s1_ops{b.rotr(e, 6), b.rotr(e, 11), b.rotr(e, 25)};
      Word big1 = b.gate(GateKind::Xor, s1_ops);
      std::array<Word, 3> ch_ops{e, f, g};
      Word ch = b.gate(GateKind::If, ch_ops);
      Word kw = b.constant_word(kSha256K[t], 32);
      std::array<Word, 5> t1_ops{h, big1, ch, kw, w_suffix[t - first_round]};
      Word t1 = b.add_multi(t1_ops);
      std::array<Word, 3> s0_ops{b.rotr(a, 2), b.rotr(a, 13), b.rotr(a, 22)};
      Word big0 = b.gate(GateKind::Xor, s0_ops);
      std::array<Word, 3> maj_ops{a, bb, c};
      Word mj = b.gate(GateKind::Maj, maj_ops);
      std::array<Word, 2> e_ops{d, t1};
      Word new_e = b.add_multi(e_ops);
      std::array<Word, 3> a_ops{t1, big0, mj};
      Word new_a = b.add_multi(a_ops);
      h = g;
      g = f;
      f = e;
      e = new_e;
      d = c;
      c = bb;
      bb = a;
      a = new_a;
    }
    for (int i = 0; i < 8; i++) {
      std::array<Word, 2> ff{b.constant_word(kSha256Iv[i], 32), st[i]};
      out.digest.push_back(freshen_word(b, b.add_multi(ff)));
    }
  } else {
    std::array<Word, 5> st;
    for (int i = 0; i < 5; i++) st[i] = state_in[i];
    for (int t = first_round; t < total_rounds; t++) {
      auto &[a, bb, c, d, e] = st;
      Word f;
      std::array<Word, 3> ops{bb, c, d};
      if (t < 20) f = b.gate(GateKind::If, ops);
      else if (t >= 40 && t < 60) f = b.gate(GateKind::Maj, ops);
      else f = b.gate(GateKind::Xor, ops);
      Word kw = b.constant_word(kSha1K[t / 20], 32);
      std::array<Word, 5> t_ops{b.rotl(a, 5), f, e, kw,
                                w_suffix[t - first_round]};
      Word tmp = b.add_multi(t_ops);
      e = d;
      d = c;
      c = b.rotl(bb, 30);
      bb = a;
      a = tmp;
    }
    for (int i = 0; i < 5; i++) {
      std::array<Word, 2> ff{b.constant_word(kSha1Iv[i], 32), st[i]};
      out.digest.push_back(freshen_word(b, b.add_multi(ff)));
    }
  }
  return out;
}

} // namespace progsat
