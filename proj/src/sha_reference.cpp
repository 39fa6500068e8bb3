#include "progsat/sha_reference.hpp"

#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace progsat {

const char *to_string(HashFunction f) {
  return f == HashFunction::Sha1 ? "sha1" : "sha256";
}

HashFunction hash_function_from(const std::string &name) {
  if (name == "sha1") return HashFunction::Sha1;
  if (name == "sha256") return HashFunction::Sha256;
  throw std::invalid_argument("unknown hash function '" + name + "'");
}

int digest_words(HashFunction f) { return f == HashFunction::Sha1 ? 5 : 8; }
int max_rounds(HashFunction f) { return f == HashFunction::Sha1 ? 80 : 64; }

const std::array<uint32_t, 8> kSha256Iv = {
    0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
    0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

const std::array<uint32_t, 64> kSha256K = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

const std::array<uint32_t, 5> kSha1Iv = {0x67452301, 0xefcdab89, 0x98badcfe,
                                         0x10325476, 0xc3d2e1f0};

const std::array<uint32_t, 4> kSha1K = {0x5a827999, 0x6ed9eba1, 0x8f1bbcdc,
                                        0xca62c1d6};

namespace {
inline uint32_t rotr(uint32_t x, int k) { return std::rotr(x, k); }
inline uint32_t rotl(uint32_t x, int k) { return std::rotl(x, k); }
inline uint32_t ch(uint32_t x, uint32_t y, uint32_t z) {
  return (x & y) | (~x & z);
}
inline uint32_t maj(uint32_t x, uint32_t y, uint32_t z) {
  return (x & y) | (x & z) | (y & z);
}
inline uint32_t big_sigma0(uint32_t x) {
  return rotr(x, 2) ^ rotr(x, 13) ^ rotr(x, 22);
}
inline uint32_t big_sigma1(uint32_t x) {
  return rotr(x, 6) ^ rotr(x, 11) ^ rotr(x, 25);
}
inline uint32_t small_sigma0(uint32_t x) {
  return rotr(x, 7) ^ rotr(x, 18) ^ (x >> 3);
}
inline uint32_t small_sigma1(uint32_t x) {
  return rotr(x, 17) ^ rotr(x, 19) ^ (x >> 10);
}
} // namespace

std::vector<uint32_t> sha256_schedule(const std::array<uint32_t, 16> &block,
                                      int rounds) {
  std::vector<uint32_t> w(block.begin(), block.end());
  w.resize(std::max(rounds, 16));
  for (int t = 16; t < rounds; t++)
    w[t] = small_sigma1(w[t - 2]) + w[t - 7] + small_sigma0(w[t - 15]) +
           w[t - 16];
  return w;
}

std::vector<uint32_t> sha1_schedule(const std::array<uint32_t, 16> &block,
                                    int rounds) {
  std::vector<uint32_t> w(block.begin(), block.end());
  w.resize(std::max(rounds, 16));
  for (int t = 16; t < rounds; t++)
    w[t] = rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);
  return w;
}

std::array<uint32_t, 8> sha256_rounds_from(std::array<uint32_t, 8> s,
                                           std::span<const uint32_t> w,
                                           int first_round, int nrounds) {
  auto [a, b, c, d, e, f, g, h] = s;
  for (int i = 0; i < nrounds; i++) {
    int t = first_round + i;
    assert(t < 64);
    uint32_t t1 = h + big_sigma1(e) + ch(e, f, g) + kSha256K[t] + w[i];
    uint32_t t2 = big_sigma0(a) + maj(a, b, c);
    h = g;
    g = f;
    f = e;
    e = d + t1;
    d = c;
    c = b;
    b = a;
    a = t1 + t2;
  }
  return {a, b, c, d, e, f, g, h};
}

std::array<uint32_t, 5> sha1_rounds_from(std::array<uint32_t, 5> s,
                                         std::span<const uint32_t> w,
                                         int first_round, int nrounds) {
  auto [a, b, c, d, e] = s;
  for (int i = 0; i < nrounds; i++) {
    int t = first_round + i;
    assert(t < 80);
    uint32_t f;
    if (t < 20) f = ch(b, c, d);
    else if (t < 40) f = b ^ c ^ d;
    else if (t < 60) f = maj(b, c, d);
    else f = b ^ c ^ d;
    uint32_t tmp = rotl(a, 5) + f + e + kSha1K[t / 20] + w[i];
    e = d;
    d = c;
    c = rotl(b, 30);
    b = a;
    a = tmp;
  }
  return {a, b, c, d, e};
}

std::array<uint32_t, 8> sha256_compress(const std::array<uint32_t, 8> &iv,
                                        const std::array<uint32_t, 16> &block,
                                        int rounds) {
  assert(rounds >= 1 && rounds <= 64);
  auto w = sha256_schedule(block, rounds);
  auto out = sha256_rounds_from(iv, std::span(w).subspan(0, rounds), 0, rounds);
  for (int i = 0; i < 8; i++) out[i] += iv[i];
  return out;
}

std::array<uint32_t, 5> sha1_compress(const std::array<uint32_t, 5> &iv,
                                      const std::array<uint32_t, 16> &block,
                                      int rounds) {
  assert(rounds >= 1 && rounds <= 80);
  auto w = sha1_schedule(block, rounds);
  auto out = sha1_rounds_from(iv, std::span(w).subspan(0, rounds), 0, rounds);
  for (int i = 0; i < 5; i++) out[i] += iv[i];
  return out;
}

std::array<uint32_t, 16> pad_one_block(std::span<const uint8_t> message) {
  if (message.size() > 55)
    throw std::invalid_argument("one-block padding needs a message of at most 55 bytes");
  std::array<uint8_t, 64> bytes{};
  for (size_t i = 0; i < message.size(); i++) bytes[i] = message[i];
  bytes[message.size()] = 0x80;
  uint64_t bits = static_cast<uint64_t>(message.size()) * 8;
  for (int i = 0; i < 8; i++)
    bytes[56 + i] = static_cast<uint8_t>(bits >> (8 * (7 - i)));
  std::array<uint32_t, 16> block{};
  for (int i = 0; i < 16; i++)
    block[i] = (uint32_t(bytes[4 * i]) << 24) | (uint32_t(bytes[4 * i + 1]) << 16) |
               (uint32_t(bytes[4 * i + 2]) << 8) | uint32_t(bytes[4 * i + 3]);
  return block;
}

std::array<uint32_t, 16> pad_one_block(const std::string &message) {
  return pad_one_block(std::span(
      reinterpret_cast<const uint8_t *>(message.data()), message.size()));
}

std::string digest_hex(std::span<const uint32_t> digest) {
  std::ostringstream out;
  for (uint32_t w : digest) {
    char buf[9];
    std::snprintf(buf, sizeof(buf), "%08x", w);
    out << buf;
  }
  return out.str();
}

std::vector<uint32_t> digest_from_hex(const std::string &hex) {
  if (hex.size() % 8 != 0)
    throw std::invalid_argument("digest hex length must be a multiple of 8");
  std::vector<uint32_t> words;
  for (size_t i = 0; i < hex.size(); i += 8)
    words.push_back(static_cast<uint32_t>(std::stoul(hex.substr(i, 8), nullptr, 16)));
  return words;
}

} // namespace progsat
