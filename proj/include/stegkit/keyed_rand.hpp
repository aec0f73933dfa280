#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "stegkit/errors.hpp"

namespace stegkit {

// Stream domain tags. Payload channels use their channel id; auxiliary
// streams get distinct bytes so no two consumers share selection randomness.
inline constexpr uint8_t kLsbStreamTag = 0x00;
inline constexpr uint8_t kDctStreamTag = 0x01;
inline constexpr uint8_t kLayoutStreamTag = 0x4C;
inline constexpr uint8_t kNoiseStreamTag = 0x4E;

/// Secret key material (16..64 bytes) plus the stream domain tag.
struct StegoKey {
  std::vector<uint8_t> bytes;
  uint8_t channel_id = 0;
};

StegoKey make_key(std::span<const uint8_t> bytes, uint8_t channel_id);

/// Deterministic byte stream: block i is SHA-256(key bytes || channel id byte
/// || big-endian u64 counter), i = 0, 1, 2, ... A stream is a pure function of
/// (key bytes, channel id, starting counter); clones replay identically.
class KeyStream {
 public:
  explicit KeyStream(const StegoKey& key, uint64_t start_counter = 0);

  void fill(std::span<uint8_t> out);
  uint64_t next_u64();  // big-endian read of the next 8 stream bytes

  /// Unbiased draw in [0, bound) by rejection sampling on 64-bit chunks.
  uint64_t uniform_below(uint64_t bound);

  /// Fisher-Yates permutation of [0, n) driven by uniform_below.
  std::vector<uint32_t> permutation(uint32_t n);

 private:
  void refill();

  StegoKey key_;
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t pos_ = 32;
};

/// First n bytes of the stream for (key, channel id), counter starting at 0.
std::vector<uint8_t> keystream_bytes(const StegoKey& key, size_t n);

}  // namespace stegkit
