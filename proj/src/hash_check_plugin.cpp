#include "progsat/hash_check_plugin.hpp"

#include <cassert>
#include <stdexcept>

namespace progsat {

size_t MessageSpec::secret_bits() const {
  size_t n = 0;
  for (const auto &w : secret_words) n += w.size();
  return n;
}

std::vector<uint32_t>
MessageSpec::recompute(const std::vector<uint32_t> &words) const {
  int nstate = digest_words(function);
  if (frontier_round == 0) {
    if (words.size() != 16)
      throw std::invalid_argument("preimage spec expects 16 message words");
    std::array<uint32_t, 16> block;
    std::copy(words.begin(), words.end(), block.begin());
    if (function == HashFunction::Sha256) {
      auto d = sha256_compress(kSha256Iv, block, total_rounds);
      return {d.begin(), d.end()};
    }
    auto d = sha1_compress(kSha1Iv, block, total_rounds);
    return {d.begin(), d.end()};
  }

  int suffix = total_rounds - frontier_round;
  if (static_cast<int>(words.size()) != nstate + suffix)
    throw std::invalid_argument("suffix spec word count mismatch");
  std::span<const uint32_t> w(words.data() + nstate, suffix);
  std::vector<uint32_t> out;
  if (function == HashFunction::Sha256) {
    std::array<uint32_t, 8> st;
    std::copy_n(words.begin(), 8, st.begin());
    auto fin = sha256_rounds_from(st, w, frontier_round, suffix);
    for (int i = 0; i < 8; i++) out.push_back(fin[i] + kSha256Iv[i]);
  } else {
    std::array<uint32_t, 5> st;
    std::copy_n(words.begin(), 5, st.begin());
    auto fin = sha1_rounds_from(st, w, frontier_round, suffix);
    for (int i = 0; i < 5; i++) out.push_back(fin[i] + kSha1Iv[i]);
  }
  return out;
}

HashCheck::HashCheck(MessageSpec spec, std::string name)
    : name_(std::move(name)), spec_(std::move(spec)) {
  if (spec_.digest.size() != static_cast<size_t>(digest_words(spec_.function)))
    throw std::invalid_argument("digest word count does not match function");
}

void HashCheck::check(const AssignmentView &view, std::vector<ExtClause> &out) {
  std::vector<uint32_t> words;
  words.reserve(spec_.secret_words.size());
  for (const auto &ids : spec_.secret_words) {
    uint32_t w = 0;
    for (size_t j = 0; j < ids.size(); j++) {
      lbool v = view.value_of(ids[j]);
      if (v == lbool::Undef) return; // secret not complete yet
      if (v == lbool::True) w |= uint32_t{1} << j;
    }
    words.push_back(w);
  }

  std::vector<uint32_t> got = spec_.recompute(words);
  if (std::equal(got.begin(), got.end(), spec_.digest.begin(),
                 spec_.digest.end()))
    return;

  // Block the spurious secret bits.
  ExtClause clause;
  clause.reserve(spec_.secret_bits());
  for (const auto &ids : spec_.secret_words)
    for (int id : ids)
      clause.push_back(view.value_of(id) == lbool::True ? -id : id);
  out.push_back(std::move(clause));
  rejections_++;
}

} // namespace progsat
