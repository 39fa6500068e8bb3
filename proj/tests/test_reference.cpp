#include "doctest.h"
#include "progsat/sha_reference.hpp"

#include <random>

using namespace progsat;

TEST_CASE("sha256 standard vectors") {
  CHECK(digest_hex(sha256_compress(kSha256Iv, pad_one_block("abc"), 64)) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(digest_hex(sha256_compress(kSha256Iv, pad_one_block(""), 64)) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(digest_hex(sha256_compress(kSha256Iv,
                                   pad_one_block("hello world"), 64)) ==
        "b94d27b9934d3e08a52e52d7da7dabfac484efe37a5380ee9088f7ace2efcde9");
}

TEST_CASE("sha1 standard vectors") {
  CHECK(digest_hex(sha1_compress(kSha1Iv, pad_one_block("abc"), 80)) ==
        "a9993e364706816aba3e25717850c26c9cd0d89d");
  CHECK(digest_hex(sha1_compress(kSha1Iv, pad_one_block(""), 80)) ==
        "da39a3ee5e6b4b0d3255bfef95601890afd80709");
}

TEST_CASE("reduced rounds compose with suffix computation") {
  // Running r1 rounds and then r-r1 rounds from the intermediate state must
  // equal running r rounds in one go (before feed-forward).
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; trial++) {
    std::array<uint32_t, 16> block;
    for (auto &w : block) w = static_cast<uint32_t>(rng());
    int rounds = 8 + static_cast<int>(rng() % 56);
    int split = 1 + static_cast<int>(rng() % (rounds - 1));

    auto w = sha256_schedule(block, rounds);
    auto full = sha256_rounds_from(kSha256Iv, std::span(w).subspan(0, rounds),
                                   0, rounds);
    auto mid = sha256_rounds_from(kSha256Iv, std::span(w).subspan(0, split), 0,
                                  split);
    auto tail = sha256_rounds_from(
        mid, std::span(w).subspan(split, rounds - split), split,
        rounds - split);
    CHECK(full == tail);
  }
}

TEST_CASE("sha1 suffix composition") {
  std::mt19937_64 rng(43);
  std::array<uint32_t, 16> block;
  for (auto &w : block) w = static_cast<uint32_t>(rng());
  auto w = sha1_schedule(block, 80);
  auto full = sha1_rounds_from(kSha1Iv, std::span(w), 0, 80);
  auto mid = sha1_rounds_from(kSha1Iv, std::span(w).subspan(0, 30), 0, 30);
  auto tail = sha1_rounds_from(mid, std::span(w).subspan(30, 50), 30, 50);
  CHECK(full == tail);
}

TEST_CASE("padding layout") {
  auto block = pad_one_block("abc");
  CHECK(block[0] == 0x61626380u);
  for (int i = 1; i < 15; i++) CHECK(block[i] == 0);
  CHECK(block[15] == 24u);
  CHECK_THROWS(pad_one_block(std::string(56, 'x')));
}

TEST_CASE("digest hex round-trip") {
  std::array<uint32_t, 8> d = {1, 2, 3, 0xdeadbeef, 5, 6, 7, 8};
  auto hex = digest_hex(d);
  auto back = digest_from_hex(hex);
  REQUIRE(back.size() == 8);
  for (int i = 0; i < 8; i++) CHECK(back[i] == d[i]);
}
