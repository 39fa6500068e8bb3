#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace progsat {

enum class HashFunction { Sha1, Sha256 };

const char *to_string(HashFunction f);
HashFunction hash_function_from(const std::string &name);
int digest_words(HashFunction f);
int max_rounds(HashFunction f);

// Reference implementations of the SHA-1 and SHA-256 compression functions,
// round-parameterizable: r rounds of the round function followed by the
// feed-forward addition of the chaining input. These definitions are the
// single source of truth shared by the CNF encoders, the fault simulator
// and the model verifiers.

extern const std::array<uint32_t, 8> kSha256Iv;
extern const std::array<uint32_t, 64> kSha256K;
extern const std::array<uint32_t, 5> kSha1Iv;
extern const std::array<uint32_t, 4> kSha1K;

// Expanded message schedule. SHA-1 words carry the rotate-by-one.
std::vector<uint32_t> sha256_schedule(const std::array<uint32_t, 16> &block,
                                      int rounds);
std::vector<uint32_t> sha1_schedule(const std::array<uint32_t, 16> &block,
                                    int rounds);

// Raw round iteration from an arbitrary state, with schedule words supplied
// by the caller; round constants are indexed by the absolute round number.
std::array<uint32_t, 8> sha256_rounds_from(std::array<uint32_t, 8> state,
                                           std::span<const uint32_t> w,
                                           int first_round, int nrounds);
std::array<uint32_t, 5> sha1_rounds_from(std::array<uint32_t, 5> state,
                                         std::span<const uint32_t> w,
                                         int first_round, int nrounds);

// rounds of compression + feed-forward of iv.
std::array<uint32_t, 8> sha256_compress(const std::array<uint32_t, 8> &iv,
                                        const std::array<uint32_t, 16> &block,
                                        int rounds);
std::array<uint32_t, 5> sha1_compress(const std::array<uint32_t, 5> &iv,
                                      const std::array<uint32_t, 16> &block,
                                      int rounds);

// One-block FIPS padding; message must be at most 55 bytes.
std::array<uint32_t, 16> pad_one_block(std::span<const uint8_t> message);
std::array<uint32_t, 16> pad_one_block(const std::string &message);

std::string digest_hex(std::span<const uint32_t> digest);
std::vector<uint32_t> digest_from_hex(const std::string &hex);

} // namespace progsat
